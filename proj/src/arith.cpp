#include "closefact/arith.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace closefact::arith {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = [] {
    std::vector<bool> composite(kTrialLimit + 1, false);
    std::vector<std::uint32_t> out;
    for (u64 i = 2; i <= kTrialLimit; ++i) {
      if (composite[i]) continue;
      out.push_back(static_cast<std::uint32_t>(i));
      for (u64 j = i * i; j <= kTrialLimit; j += i) composite[j] = true;
    }
    return out;
  }();
  return primes;
}

// Modular primitives, overloaded so the Miller-Rabin and Pollard-Brent
// templates below run unchanged on machine words and on BigInt.
u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
BigInt mul_mod(const BigInt& a, const BigInt& b, const BigInt& m) { return a * b % m; }

u64 add_mod(u64 a, u64 b, u64 m) { return static_cast<u64>((static_cast<u128>(a) + b) % m); }
BigInt add_mod(const BigInt& a, const BigInt& b, const BigInt& m) { return (a + b) % m; }

u64 int_gcd(u64 a, u64 b) { return std::gcd(a, b); }
BigInt int_gcd(const BigInt& a, const BigInt& b) { return boost::multiprecision::gcd(a, b); }

template <class Int>
Int pow_mod(Int base, Int exp, const Int& m) {
  Int result = 1;
  base %= m;
  while (exp > 0) {
    if ((exp & 1) != 0) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

template <class Int>
bool strong_probable_prime(const Int& n, std::span<const unsigned> bases) {
  if (n < 2) return false;
  for (unsigned p : bases) {
    if (n == p) return true;
    if (n % p == 0) return false;
  }
  Int d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (unsigned a : bases) {
    Int x = pow_mod<Int>(Int(a), d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

constexpr std::array<unsigned, 12> kBases64{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
constexpr std::array<unsigned, 13> kBasesBig{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

// Returns a nontrivial factor of composite n, or n itself if this c failed.
template <class Int>
Int brent_attempt(const Int& n, const Int& c) {
  constexpr unsigned kBatch = 128;
  auto step = [&](const Int& v) { return add_mod(mul_mod(v, v, n), c, n); };

  Int y = 2, x, ys, q = 1, g = 1;
  std::uint64_t r = 1;
  while (g == 1) {
    x = y;
    for (std::uint64_t i = 0; i < r; ++i) y = step(y);
    std::uint64_t k = 0;
    while (k < r && g == 1) {
      ys = y;
      const std::uint64_t lim = std::min<std::uint64_t>(kBatch, r - k);
      for (std::uint64_t i = 0; i < lim; ++i) {
        y = step(y);
        q = mul_mod(q, Int(x > y ? x - y : y - x), n);
      }
      g = int_gcd(q, n);
      k += lim;
    }
    r *= 2;
  }
  if (g == n) {
    // The batch overshot; walk it again one step at a time.
    do {
      ys = step(ys);
      g = int_gcd(Int(x > ys ? x - ys : ys - x), n);
    } while (g == 1);
  }
  return g;
}

template <class Int>
Int find_factor(const Int& n) {
  if ((n & 1) == 0) return 2;
  for (Int c = 1;; ++c) {
    Int g = brent_attempt(n, c);
    if (g != n) return g;
  }
}

// Largest k with n = r^k, r > 1; returns {n, 1} when n is no perfect power.
// Candidate roots are all above kTrialLimit, so k stays below log2(n) / 19.
std::pair<BigInt, unsigned> perfect_power(const BigInt& n) {
  const unsigned bits = boost::multiprecision::msb(n) + 1;
  for (unsigned k = bits / 19 + 1; k >= 2; --k) {
    // Integer k-th root by bisection over [2^((bits-1)/k), 2^(bits/k + 1)].
    BigInt lo = BigInt(1) << ((bits - 1) / k);
    BigInt hi = BigInt(1) << (bits / k + 1);
    while (lo < hi) {
      const BigInt mid = (lo + hi + 1) / 2;
      if (boost::multiprecision::pow(mid, k) <= n)
        lo = mid;
      else
        hi = mid - 1;
    }
    if (boost::multiprecision::pow(lo, k) == n) return {lo, k};
  }
  return {n, 1};
}

template <class Int, class Prime>
void split_into(const Int& n, std::vector<Int>& out, Prime&& prime_test) {
  if (n == 1) return;
  if (prime_test(n)) {
    out.push_back(n);
    return;
  }
  if (const auto [root, k] = perfect_power(BigInt(n)); k > 1) {
    std::vector<Int> base;
    split_into(Int(root), base, prime_test);
    for (unsigned i = 0; i < k; ++i) out.insert(out.end(), base.begin(), base.end());
    return;
  }
  Int f = find_factor(n);
  split_into(f, out, prime_test);
  split_into(Int(n / f), out, prime_test);
}

void append_factor(std::vector<PrimePower>& pp, const BigInt& p, unsigned e) {
  if (!pp.empty() && pp.back().prime == p)
    pp.back().exponent += e;
  else
    pp.push_back({p, e});
}

// Trial division; returns the unfactored cofactor (1 when done).
template <class Int>
Int trial_divide(Int m, std::vector<PrimePower>& pp) {
  for (std::uint32_t p : small_primes()) {
    if (Int(p) * p > m) break;
    if (m % p != 0) continue;
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    pp.push_back({BigInt(p), e});
  }
  return m;
}

template <class Int>
void finish(const Int& cofactor, std::vector<PrimePower>& pp) {
  if (cofactor == 1) return;
  // No prime factor below kTrialLimit remains, so anything under its square
  // is itself prime.
  if (cofactor < Int(kTrialLimit) * kTrialLimit) {
    pp.push_back({BigInt(cofactor), 1});
    return;
  }
  std::vector<Int> primes;
  if constexpr (std::is_same_v<Int, u64>) {
    split_into(cofactor, primes, [](u64 v) { return is_prime(v); });
  } else {
    split_into(cofactor, primes, [](const BigInt& v) { return is_prime(v); });
  }
  std::sort(primes.begin(), primes.end());
  for (const Int& p : primes) append_factor(pp, BigInt(p), 1);
}

}  // namespace

bool is_prime(std::uint64_t n) { return strong_probable_prime<u64>(n, kBases64); }

bool is_prime(const BigInt& n) {
  if (auto small = to_uint64(n)) return is_prime(*small);
  return strong_probable_prime<BigInt>(n, kBasesBig);
}

std::uint64_t FactoredInteger::divisor_count() const {
  std::uint64_t count = 1;
  for (const auto& pp : prime_powers) count *= pp.exponent + 1;
  return count;
}

BigInt FactoredInteger::product() const {
  BigInt v = 1;
  for (const auto& pp : prime_powers) v *= boost::multiprecision::pow(pp.prime, pp.exponent);
  return v;
}

FactoredInteger factorize(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("factorize: n must be positive, got " + n.str());
  FactoredInteger out{n, {}};
  if (auto small = to_uint64(n)) {
    finish(trial_divide<u64>(*small, out.prime_powers), out.prime_powers);
  } else {
    finish(trial_divide<BigInt>(n, out.prime_powers), out.prime_powers);
  }
  return out;
}

DivisorList divisors(const FactoredInteger& f) {
  std::vector<BigInt> ds{1};
  ds.reserve(f.divisor_count());
  for (const auto& [p, e] : f.prime_powers) {
    const std::size_t base = ds.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) ds.push_back(ds[i] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return {f.n, std::move(ds)};
}

DivisorSieve::DivisorSieve(std::uint64_t n_hi, std::uint64_t ceiling) : limit_(n_hi) {
  if (n_hi > ceiling) {
    throw budget_exceeded("sieve limit " + std::to_string(n_hi) + " exceeds ceiling " +
                          std::to_string(ceiling));
  }
  if (n_hi > std::numeric_limits<std::uint32_t>::max()) {
    throw budget_exceeded("sieve limit must stay below 2^32");
  }
  spf_.assign(n_hi + 1, 0);
  for (u64 i = 2; i <= n_hi; ++i) {
    if (spf_[i] != 0) continue;
    spf_[i] = static_cast<std::uint32_t>(i);
    for (u64 j = i * i; j <= n_hi; j += i) {
      if (spf_[j] == 0) spf_[j] = static_cast<std::uint32_t>(i);
    }
  }
}

void DivisorSieve::divisors_of(std::uint64_t n, std::vector<std::uint64_t>& out) const {
  if (n < 1 || n > limit_) throw std::out_of_range("n outside sieve range");
  out.clear();
  out.push_back(1);
  while (n > 1) {
    const u64 p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    const std::size_t base = out.size();
    u64 pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  std::sort(out.begin(), out.end());
}

void sieve_divisor_lists(const DivisorSieve& sieve, std::uint64_t n_lo, std::uint64_t n_hi,
                         const std::function<void(const SieveDivisorList&)>& sink) {
  if (n_lo < 2 || n_lo > n_hi) throw std::invalid_argument("sieve range must satisfy 2 <= lo <= hi");
  if (n_hi > sieve.limit()) throw budget_exceeded("range end beyond prebuilt sieve");
  std::vector<u64> buf;
  for (u64 n = n_lo; n <= n_hi; ++n) {
    sieve.divisors_of(n, buf);
    sink({n, buf});
  }
}

void sieve_divisor_lists(std::uint64_t n_lo, std::uint64_t n_hi,
                         const std::function<void(const SieveDivisorList&)>& sink,
                         std::uint64_t ceiling) {
  if (n_lo < 2 || n_lo > n_hi) throw std::invalid_argument("sieve range must satisfy 2 <= lo <= hi");
  const DivisorSieve sieve(n_hi, ceiling);
  sieve_divisor_lists(sieve, n_lo, n_hi, sink);
}

BigInt pow6(const BigInt& v) {
  const BigInt cube = v * v * v;
  return cube * cube;
}

std::strong_ordering pow6_compare(const BigInt& lhs_base, const BigInt& rhs_scale,
                                  const BigInt& rhs) {
  const BigInt lhs = pow6(lhs_base);
  const BigInt r = rhs_scale * rhs;
  if (lhs < r) return std::strong_ordering::less;
  if (lhs > r) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace closefact::arith
