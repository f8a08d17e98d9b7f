#include "closefact/family.hpp"

#include <stdexcept>
#include <string>

namespace closefact::family {
namespace {

void require_n(std::int64_t N) {
  if (N < 1 || N > kMaxN) {
    throw std::invalid_argument("family member N must lie in [1, 2^60], got " + std::to_string(N));
  }
}

}  // namespace

FamilyInstance family_instance(std::int64_t N) {
  require_n(N);
  const BigInt n0 = N;
  const BigInt n1 = n0 + 1;
  const BigInt n2 = n0 + 2;
  const BigInt odd1 = 2 * n0 + 1;
  const BigInt odd3 = 2 * n0 + 3;

  FamilyInstance f;
  f.N = N;
  f.C = 2 * N + 3;
  f.n = n0 * n1 * n1 * n2 * odd1 * odd3;

  const model::OffsetQuad quad{N, N + 1, 2 * N + 1, 2 * N + 3};
  f.triple = {odd1 * n0 * n2, odd3 * n1 * n1, f.n, quad};

  // The three displayed factorizations, multiplied out independently.
  const BigInt x2 = odd3 * n1 * n0;
  const BigInt y2 = odd1 * n1 * n2;
  const BigInt x3 = odd1 * n1 * n1;
  const BigInt y3 = odd3 * n0 * n2;
  f.lattice = {f.n, {f.triple.A, x2, x3}, {f.triple.B, y2, y3}};

  if (!f.triple.verify() || !f.lattice.verify() || model::to_lattice(f.triple) != f.lattice) {
    throw std::logic_error("family member " + std::to_string(N) + " fails re-multiplication");
  }
  const auto solved = model::solve_quad(quad);
  if (!solved || *solved != f.triple) {
    throw std::logic_error("family member " + std::to_string(N) + " fails the solver round trip");
  }
  if (model::gap(f.lattice) != f.C) {
    throw std::logic_error("family member " + std::to_string(N) + " has gap != 2N+3");
  }
  return f;
}

bool family_attains_bound(std::int64_t N) {
  const FamilyInstance f = family_instance(N);
  const BigInt& top = f.triple.A > f.triple.B ? f.triple.A : f.triple.B;
  const BigInt C = f.C;
  return 4 * top == C * (C - 1) * (C - 1);
}

Cor1UpperCertificate cor1_upper_test(const BigInt& gap, const BigInt& n) {
  Cor1UpperCertificate c;
  const BigInt base = 5 * gap - 6;
  const BigInt cube = base * base * base;
  c.lhs = cube * cube;
  c.rhs = 250000 * n;
  c.holds = c.lhs < c.rhs;
  return c;
}

Cor1UpperCertificate family_cor1_margin(std::int64_t N) {
  const FamilyInstance f = family_instance(N);
  return cor1_upper_test(model::gap(f.lattice), f.n);
}

ThresholdReport family_threshold_scan(std::int64_t N_max) {
  if (N_max < 2) throw std::invalid_argument("family_threshold_scan needs N_max >= 2");
  ThresholdReport r;
  r.N_max = N_max;
  r.N0 = 1;
  for (std::int64_t N = 1; N <= N_max; ++N) {
    if (!family_cor1_margin(N).holds) {
      r.failures.push_back(N);
      r.N0 = N + 1;
    }
  }
  return r;
}

}  // namespace closefact::family
