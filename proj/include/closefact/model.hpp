#pragma once

#include "closefact/bigint.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <tuple>
#include <utility>

namespace closefact::model {

class invalid_input : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class decomposition_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Offsets of two extra factorizations n = AB = (A+a1)(B-b1) = (A+a2)(B-b2).
/// Lexicographic comparison runs over (a1, a2, b1, b2), the enumeration order
/// of the quad scans.
struct OffsetQuad {
  std::int64_t a1 = 0;
  std::int64_t b1 = 0;
  std::int64_t a2 = 0;
  std::int64_t b2 = 0;

  /// 1 <= a1 < a2 and 1 <= b1 < b2.
  bool is_ordered() const { return 1 <= a1 && a1 < a2 && 1 <= b1 && b1 < b2; }

  /// (a2-a1)b1 - (b2-b1)a1; positive for every solvable quad.
  BigInt d() const;
  /// The ceiling C = max(a2, b2).
  std::int64_t ceiling() const { return a2 > b2 ? a2 : b2; }
  /// (a2-a1)/a1.
  Rational phi() const;
  /// (b2-b1)/b1.
  Rational theta() const;

  friend bool operator==(const OffsetQuad&, const OffsetQuad&) = default;
  friend std::strong_ordering operator<=>(const OffsetQuad& l, const OffsetQuad& r) {
    return std::tie(l.a1, l.a2, l.b1, l.b2) <=> std::tie(r.a1, r.a2, r.b1, r.b2);
  }
};

/// A certified witness of three close factorizations of n.
struct FactorizationTriple {
  BigInt A;
  BigInt B;
  BigInt n;
  OffsetQuad quad;

  /// Re-multiplies all three factorizations; also checks B - b2 >= 1 and the
  /// offset ordering.
  bool verify() const;

  friend bool operator==(const FactorizationTriple&, const FactorizationTriple&) = default;
};

/// Three points on xy = n, x ascending (hence y descending).
struct LatticeTriple {
  BigInt n;
  std::array<BigInt, 3> x;
  std::array<BigInt, 3> y;

  bool verify() const;

  friend bool operator==(const LatticeTriple&, const LatticeTriple&) = default;
};

/// Builds a lattice triple from its x coordinates; throws invalid_input if
/// any x fails to divide n or the x are not strictly increasing.
LatticeTriple make_lattice_triple(const BigInt& n, const std::array<BigInt, 3>& x);

LatticeTriple to_lattice(const FactorizationTriple& t);
FactorizationTriple to_factorization(const LatticeTriple& t);

enum class CaseTag { Case1, Case2a, Case2b, Case3, Case4, Case5 };

std::string_view to_string(CaseTag tag);
/// Inverse of to_string; throws invalid_input on unknown names.
CaseTag parse_case_tag(std::string_view name);

/// Structural witnesses for a case decomposition. Which entries are set
/// depends on the case:
///   Case1        M with A + a1 = B - b1 = M, M^2 = n.
///                When the middle factorization is not the square root
///                (possible only for non-consecutive divisor triples) M is
///                unset, split_middle is true and d certifies instead.
///   Case2a/2b    A' with A = a2 A', B = b2 (A' + 1); B' = A' + 1; h, k, l.
///   Case3/4      A' with 2A = a2 A', 2B = b2 (A' + 2); B' = A' + 2; h, k, l,
///                and A'' = A'/2 when A' is even.
///   Case5        d only.
/// h = a1 and k = b2 - b1 locate the middle factorization
/// (A + h)(B - b2 + k) = n, and satisfy
///   (a2 - h)(b2 - k) A' = h k (A' + g),   g = |a2 - b2|,
/// with h k = l A' (or l A'' in the even halved case).
struct Witnesses {
  std::optional<BigInt> M;
  std::optional<BigInt> A_prime;
  std::optional<BigInt> A_dprime;
  std::optional<BigInt> B_prime;
  std::optional<std::int64_t> h;
  std::optional<std::int64_t> k;
  std::optional<BigInt> l;
  std::optional<BigInt> d;
  bool split_middle = false;

  friend bool operator==(const Witnesses&, const Witnesses&) = default;
};

struct CaseDecomposition {
  CaseTag tag = CaseTag::Case5;
  Witnesses witnesses;

  friend bool operator==(const CaseDecomposition&, const CaseDecomposition&) = default;
};

/// Solves a1 B - b1 A = a1 b1, a2 B - b2 A = a2 b2 exactly. Returns nullopt
/// when the quad is unordered, d <= 0, A or B is non-integral or
/// non-positive, or B <= b2. Every returned triple has been re-multiplied.
std::optional<FactorizationTriple> solve_quad(const OffsetQuad& q);

/// Offsets from three factorizations (A,B), (A+a1,B-b1), (A+a2,B-b2) of a
/// common n. Throws invalid_input when the products differ, the first
/// components are not strictly increasing, or an offset overflows 64 bits.
OffsetQuad quad_from_triple(const std::array<std::pair<BigInt, BigInt>, 3>& points);

/// C^3.
BigInt thm1_bound(const BigInt& C);
/// C(C-1)^2/4, exactly; equals C^3/4 - C^2/2 + C/4.
Rational thm2_bound(const BigInt& C);
/// True iff v <= C(C-1)^2/4, tested as 4v <= C(C-1)^2.
bool within_thm2_bound(const BigInt& v, const BigInt& C);

CaseTag case_of(const OffsetQuad& q);

/// Case tag plus derived witnesses; throws decomposition_failure if the
/// witnesses do not reconstruct (A, B).
CaseDecomposition classify(const FactorizationTriple& t);

/// Checks c against t independently of classify: the tag must match the
/// offsets and every witness must reconstruct (A, B) through its case
/// formula. Returns the verified witnesses or throws decomposition_failure.
Witnesses decompose(const FactorizationTriple& t, const CaseDecomposition& c);

/// max(x3 - x1, y1 - y3).
BigInt gap(const LatticeTriple& t);

/// Exact form of gap > 2^(2/3) n^(1/6) + 1/2, i.e. (2 gap - 1)^6 > 1024 n.
struct Cor1LowerCertificate {
  bool holds = false;
  BigInt lhs;  // (2 gap - 1)^6
  BigInt rhs;  // 1024 n
};
Cor1LowerCertificate cor1_lower_holds(const LatticeTriple& t);
/// Same test for a bare (gap, n) pair.
Cor1LowerCertificate cor1_lower_test(const BigInt& gap, const BigInt& n);

/// n (x3 - x1)^3 >= 4 x1^3, the cube of x3 - x1 >= 2^(2/3) x1 / n^(1/3).
bool gj_lower_holds(const LatticeTriple& t);

}  // namespace closefact::model
