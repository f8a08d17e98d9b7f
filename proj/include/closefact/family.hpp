#pragma once

#include "closefact/model.hpp"

#include <cstdint>
#include <vector>

namespace closefact::family {

/// Member N of the extremal family n = N (N+1)^2 (N+2) (2N+1) (2N+3), with
/// offsets (a1, b1, a2, b2) = (N, N+1, 2N+1, 2N+3) and C = 2N+3.
struct FamilyInstance {
  std::int64_t N = 0;
  BigInt n;
  model::FactorizationTriple triple;
  model::LatticeTriple lattice;
  std::int64_t C = 0;
};

/// Largest N accepted; keeps every offset within 64 bits.
inline constexpr std::int64_t kMaxN = (std::int64_t{1} << 60);

/// Builds member N and checks all three factorizations, the solver round trip
/// and gap = 2N+3 before returning. Throws std::invalid_argument for N < 1 or
/// N > kMaxN.
FamilyInstance family_instance(std::int64_t N);

/// max(A, B) == C(C-1)^2/4 exactly, C = 2N+3.
bool family_attains_bound(std::int64_t N);

/// Exact form of gap < 2^(2/3) n^(1/6) + 1.2, i.e. (5 gap - 6)^6 < 250000 n.
struct Cor1UpperCertificate {
  bool holds = false;
  BigInt lhs;  // (5 gap - 6)^6
  BigInt rhs;  // 250000 n
};
Cor1UpperCertificate cor1_upper_test(const BigInt& gap, const BigInt& n);

Cor1UpperCertificate family_cor1_margin(std::int64_t N);

struct ThresholdReport {
  std::int64_t N_max = 0;
  /// Smallest N0 with the margin holding on all of [N0, N_max]; N_max + 1 if
  /// it fails at N_max itself.
  std::int64_t N0 = 0;
  /// Every failing N in [1, N0).
  std::vector<std::int64_t> failures;
};

/// Throws std::invalid_argument for N_max < 2.
ThresholdReport family_threshold_scan(std::int64_t N_max);

}  // namespace closefact::family
