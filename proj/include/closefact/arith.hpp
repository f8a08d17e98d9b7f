#pragma once

#include "closefact/bigint.hpp"

#include <compare>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

namespace closefact::arith {

struct PrimePower {
  BigInt prime;
  unsigned exponent = 0;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// A positive integer together with its prime factorization, primes
/// strictly increasing.
struct FactoredInteger {
  BigInt n;
  std::vector<PrimePower> prime_powers;

  /// Number of divisors, prod(exponent + 1).
  std::uint64_t divisor_count() const;
  /// Recomputes the product of prime powers.
  BigInt product() const;
};

/// Sorted divisors of n, 1 first and n last.
struct DivisorList {
  BigInt n;
  std::vector<BigInt> divisors;
};

/// Divisor list for machine-sized n, as produced by the range sieve. The span
/// only lives for the duration of the callback that receives it.
struct SieveDivisorList {
  std::uint64_t n = 0;
  std::span<const std::uint64_t> divisors;
};

class budget_exceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Deterministic Miller-Rabin with the first twelve prime bases. Exact for
/// every 64-bit input.
bool is_prime(std::uint64_t n);
/// Same bases plus 41; exact below 3.3e24, a fixed-base strong probable prime
/// test above that.
bool is_prime(const BigInt& n);

/// Trial division by the primes below 10^6, then Pollard rho with Brent's
/// cycle detection (seeded c = 1, 2, ... on failure). Throws
/// std::invalid_argument for n < 1.
FactoredInteger factorize(const BigInt& n);

DivisorList divisors(const FactoredInteger& f);

/// Smallest-prime-factor table over [0, n_hi]. Immutable once built, safe to
/// share between threads.
class DivisorSieve {
 public:
  static constexpr std::uint64_t kDefaultCeiling = 20'000'000;

  /// Throws budget_exceeded when n_hi > ceiling.
  explicit DivisorSieve(std::uint64_t n_hi,
                        std::uint64_t ceiling = kDefaultCeiling);

  std::uint64_t limit() const { return limit_; }

  /// Writes the sorted divisors of n (2 <= n <= limit) into out.
  void divisors_of(std::uint64_t n, std::vector<std::uint64_t>& out) const;

 private:
  std::uint64_t limit_;
  std::vector<std::uint32_t> spf_;
};

/// Emits the divisor list of every n in [n_lo, n_hi] in ascending order.
void sieve_divisor_lists(std::uint64_t n_lo, std::uint64_t n_hi,
                         const std::function<void(const SieveDivisorList&)>& sink,
                         std::uint64_t ceiling = DivisorSieve::kDefaultCeiling);

/// Same, over a prebuilt sieve.
void sieve_divisor_lists(const DivisorSieve& sieve, std::uint64_t n_lo,
                         std::uint64_t n_hi,
                         const std::function<void(const SieveDivisorList&)>& sink);

/// Orders lhs_base^6 against rhs_scale * rhs, exactly.
std::strong_ordering pow6_compare(const BigInt& lhs_base, const BigInt& rhs_scale,
                                  const BigInt& rhs);

BigInt pow6(const BigInt& v);

}  // namespace closefact::arith
