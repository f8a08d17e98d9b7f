#include "closefact/family.hpp"

#include <doctest.h>

using namespace closefact;
using namespace closefact::family;

TEST_CASE("family_instance small members") {
  const FamilyInstance f1 = family_instance(1);
  CHECK(f1.n == 180);
  CHECK(f1.triple.A == 9);
  CHECK(f1.triple.B == 20);
  CHECK(f1.C == 5);
  CHECK(f1.lattice.x == std::array<BigInt, 3>{9, 10, 12});
  CHECK(f1.lattice.y == std::array<BigInt, 3>{20, 18, 15});
  CHECK(model::gap(f1.lattice) == 5);

  const FamilyInstance f2 = family_instance(2);
  CHECK(f2.n == 2520);
  CHECK(f2.triple.A == 40);
  CHECK(f2.triple.B == 63);
  CHECK(f2.lattice.x == std::array<BigInt, 3>{40, 42, 45});
  CHECK(model::gap(f2.lattice) == 7);

  const FamilyInstance f5 = family_instance(5);
  CHECK(f5.C == 13);
  CHECK(f5.triple.B == 468);
  CHECK(model::thm2_bound(13) == Rational(468));
  CHECK(f5.triple.quad == model::OffsetQuad{5, 6, 11, 13});

  CHECK_THROWS_AS(family_instance(0), std::invalid_argument);
}

TEST_CASE("family n matches the closed-form polynomial and passes the lower bound for N <= 1000") {
  for (std::int64_t N = 1; N <= 1000; ++N) {
    const FamilyInstance f = family_instance(N);
    const BigInt b = N;
    REQUIRE(f.n == b * (b + 1) * (b + 1) * (b + 2) * (2 * b + 1) * (2 * b + 3));
    REQUIRE(f.lattice.verify());
    REQUIRE(model::gap(f.lattice) == 2 * N + 3);
    REQUIRE(model::cor1_lower_holds(f.lattice).holds);
    REQUIRE(family_attains_bound(N));
  }
}

TEST_CASE("family_attains_bound") {
  CHECK(family_attains_bound(1));
  CHECK(family_attains_bound(4));
  CHECK(family_instance(4).triple.B == 275);
  CHECK(family_attains_bound(100));
}

TEST_CASE("family_cor1_margin") {
  const Cor1UpperCertificate m1 = family_cor1_margin(1);
  CHECK_FALSE(m1.holds);
  CHECK(m1.lhs == 47045881);
  CHECK(m1.rhs == 45000000);

  const Cor1UpperCertificate m2 = family_cor1_margin(2);
  CHECK(m2.holds);
  CHECK(m2.lhs == 594823321);
  CHECK(m2.rhs == 630000000);

  CHECK(family_cor1_margin(10).holds);
}

TEST_CASE("family_threshold_scan") {
  // Frozen from an exhaustive exact scan of N = 1..1000 (tests/oracle/brute_force.py).
  const ThresholdReport r = family_threshold_scan(1000);
  CHECK(r.N0 == 2);
  CHECK(r.failures == std::vector<std::int64_t>{1});

  const ThresholdReport r2 = family_threshold_scan(2);
  CHECK(r2.N0 == 2);
  CHECK(r2.failures == std::vector<std::int64_t>{1});

  CHECK(family_threshold_scan(10).N0 == 2);
  CHECK_THROWS_AS(family_threshold_scan(1), std::invalid_argument);
}

TEST_CASE("large members stay exact") {
  const FamilyInstance f = family_instance(1'000'000'000);
  CHECK(f.triple.verify());
  CHECK(f.n > BigInt(1) << 64);
  CHECK(family_cor1_margin(1'000'000'000).holds);
}
