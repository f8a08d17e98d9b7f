#pragma once

#include "closefact/arith.hpp"
#include "closefact/model.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace closefact::search {

enum class ScanKind { quad_scan, gap_scan, cross_check };

std::string_view to_string(ScanKind kind);

/// A counterexample or discrepancy. Scans record these and keep going.
struct Violation {
  std::string rule;
  BigInt n;
  std::optional<model::FactorizationTriple> triple;
  std::string detail;

  friend bool operator==(const Violation&, const Violation&) = default;
};

/// The n whose minimal gap sits closest to the lower bound.
struct MarginRecord {
  model::LatticeTriple triple;
  BigInt gap;
  BigInt margin;  // (2 gap - 1)^6 - 1024 n

  friend bool operator==(const MarginRecord&, const MarginRecord&) = default;
};

struct ScanStats {
  /// Quads tried (quad_scan), integers scanned (gap_scan) or triples found by
  /// quad enumeration (cross_check).
  std::uint64_t candidates = 0;
  /// Solvable quads, integers with at least three divisors, or triples found
  /// by divisor enumeration.
  std::uint64_t solvable = 0;
  /// Consecutive triples given the lattice test (gap_scan only).
  std::uint64_t triples_checked = 0;
  /// Wall time; excluded from the machine-readable report.
  double elapsed_seconds = 0.0;

  friend bool operator==(const ScanStats& l, const ScanStats& r) {
    return l.candidates == r.candidates && l.solvable == r.solvable &&
           l.triples_checked == r.triples_checked;
  }
};

struct ScanReport {
  ScanKind kind = ScanKind::quad_scan;
  /// Ceiling C for quad scans, [n_lo, n_hi] for gap scans, (n_max, C) for
  /// cross checks.
  BigInt range_lo;
  BigInt range_hi;

  std::optional<BigInt> max_A;
  std::optional<BigInt> max_B;
  std::vector<model::FactorizationTriple> attaining_A;
  std::vector<model::FactorizationTriple> attaining_B;
  /// Quad scans only: whether max(A, B) <= C(C-1)^2/4. Asserted for C >= 10;
  /// below that it is reported but not a violation.
  std::optional<bool> within_thm2;

  std::optional<MarginRecord> min_margin;

  std::vector<Violation> violations;
  ScanStats stats;

  bool clean() const { return violations.empty(); }

  friend bool operator==(const ScanReport&, const ScanReport&) = default;
};

/// Every solvable quad with a2, b2 <= C, in lexicographic (a1, a2, b1, b2)
/// order, paired with its triple. Returns the number of quads tried. Throws
/// std::invalid_argument for C < 2.
std::uint64_t enumerate_quads(
    std::int64_t C,
    const std::function<void(const model::OffsetQuad&, const model::FactorizationTriple&)>& sink);

std::vector<model::FactorizationTriple> collect_quads(std::int64_t C);

/// Max A and max B over all solvable quads with ceiling C, with the
/// max(A, B) < C^3 (every C) and 4 max(A, B) <= C(C-1)^2 (C >= 10) checks as violations.
ScanReport max_AB(std::int64_t C);

struct TripleQuery {
  std::optional<std::int64_t> cap;
  bool consecutive_only = false;
};

/// Divisor triples d1 < d2 < d3 of n as factorization triples, ordered by
/// (d1, d2, d3). Empty for n < 2 or fewer than three divisors.
std::vector<model::FactorizationTriple> triples_for_n(const BigInt& n, TripleQuery query = {});

/// Consecutive-divisor triple minimizing the gap, ties to the smallest x1.
std::optional<model::LatticeTriple> min_gap_triple(const BigInt& n);

struct GapScanOptions {
  unsigned workers = 1;
  std::uint64_t sieve_ceiling = arith::DivisorSieve::kDefaultCeiling;
};

/// Lower-bound test on the minimal-gap triple of every n in [n_lo, n_hi] and
/// the lattice test on every consecutive triple. Chunks are processed by
/// independent workers and merged in ascending order, so the report does not
/// depend on the worker count. Throws arith::budget_exceeded above the sieve
/// ceiling and std::invalid_argument unless 2 <= n_lo <= n_hi.
ScanReport scan_gaps(std::uint64_t n_lo, std::uint64_t n_hi, GapScanOptions options = {});

/// Compares the triples with n <= n_max from quad enumeration at ceiling C
/// against per-n divisor enumeration capped at C. Discrepancies are
/// violations.
ScanReport cross_check(std::uint64_t n_max, std::int64_t C);

/// Case tally over every solvable quad with ceiling C.
struct CaseCensus {
  std::int64_t C = 0;
  std::array<std::uint64_t, 6> counts{};  // indexed by CaseTag
  std::uint64_t total = 0;
  /// Case 1 triples whose middle factorization is not the square root.
  std::uint64_t split_middle = 0;
  /// Of those, how many sit on consecutive divisors (expected 0).
  std::uint64_t split_middle_consecutive = 0;
  std::vector<Violation> failures;
};

CaseCensus case_census(std::int64_t C);

/// True iff A + a1 is the only divisor of n strictly between A and A + a2.
bool is_consecutive(const model::FactorizationTriple& t);

}  // namespace closefact::search
