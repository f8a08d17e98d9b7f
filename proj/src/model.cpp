#include "closefact/model.hpp"

#include <string>

namespace closefact::model {
namespace {

BigInt big(std::int64_t v) { return BigInt(v); }

std::int64_t narrow_offset(const BigInt& v, const char* name) {
  auto out = to_int64(v);
  if (!out) throw invalid_input(std::string("offset ") + name + " does not fit in 64 bits");
  return *out;
}

[[noreturn]] void fail(const FactorizationTriple& t, const std::string& why) {
  throw decomposition_failure("decomposition of A=" + t.A.str() + " B=" + t.B.str() + ": " + why);
}

// g = |a2 - b2| for Cases 2-4.
std::int64_t case_shift(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case2a:
    case CaseTag::Case2b:
      return 1;
    case CaseTag::Case3:
    case CaseTag::Case4:
      return 2;
    default:
      return 0;
  }
}

Witnesses derive_witnesses(const FactorizationTriple& t, CaseTag tag) {
  const OffsetQuad& q = t.quad;
  Witnesses w;
  if (tag == CaseTag::Case5) {
    w.d = q.d();
    return w;
  }
  if (tag == CaseTag::Case1) {
    const BigInt lo = t.A + q.a1;
    const BigInt hi = t.B - q.b1;
    if (lo == hi) {
      w.M = lo;
    } else {
      w.split_middle = true;
      w.d = q.d();
    }
    return w;
  }

  const std::int64_t g = case_shift(tag);
  const BigInt scaled = g * t.A;
  if (scaled % q.a2 != 0) fail(t, "a2 does not divide g*A");
  const BigInt a_prime = scaled / q.a2;
  w.A_prime = a_prime;
  w.B_prime = a_prime + g;

  // The identity is linear in k:
  //   k = (a2-h) b2 A' / ((a2-h) A' + h (A'+g)).
  // Only h = a1 can reproduce this triple's middle factorization.
  const std::int64_t h = q.a1;
  const BigInt num = (q.a2 - h) * big(q.b2) * a_prime;
  const BigInt den = (q.a2 - h) * a_prime + h * (a_prime + g);
  if (num % den == 0) {
    const BigInt k = num / den;
    if (k > 0 && k < q.b2 && (t.A + h) * (t.B - q.b2 + k) == t.n) {
      w.h = h;
      w.k = static_cast<std::int64_t>(k);
    }
  }
  if (!w.h) fail(t, "no (h, k) reproduces the middle factorization");

  const BigInt hk = big(*w.h) * *w.k;
  if (g == 2 && a_prime % 2 == 0) {
    const BigInt a_dprime = a_prime / 2;
    w.A_dprime = a_dprime;
    if (hk % a_dprime != 0) fail(t, "A'' does not divide hk");
    w.l = hk / a_dprime;
  } else {
    if (hk % a_prime != 0) fail(t, "A' does not divide hk");
    w.l = hk / a_prime;
  }
  return w;
}

void check(bool cond, const FactorizationTriple& t, const char* what) {
  if (!cond) fail(t, what);
}

}  // namespace

BigInt OffsetQuad::d() const { return big(a2 - a1) * b1 - big(b2 - b1) * a1; }

Rational OffsetQuad::phi() const { return Rational(big(a2 - a1), big(a1)); }

Rational OffsetQuad::theta() const { return Rational(big(b2 - b1), big(b1)); }

bool FactorizationTriple::verify() const {
  if (!quad.is_ordered() || A < 1 || B - quad.b2 < 1) return false;
  return A * B == n && (A + quad.a1) * (B - quad.b1) == n && (A + quad.a2) * (B - quad.b2) == n;
}

bool LatticeTriple::verify() const {
  if (n < 1) return false;
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] < 1 || x[i] * y[i] != n) return false;
  }
  return x[0] < x[1] && x[1] < x[2];
}

LatticeTriple make_lattice_triple(const BigInt& n, const std::array<BigInt, 3>& x) {
  if (n < 1) throw invalid_input("lattice triple needs n >= 1");
  LatticeTriple t{n, x, {}};
  for (std::size_t i = 0; i < 3; ++i) {
    if (x[i] < 1 || n % x[i] != 0) throw invalid_input("x = " + x[i].str() + " does not divide n");
    t.y[i] = n / x[i];
  }
  if (!(x[0] < x[1] && x[1] < x[2])) throw invalid_input("lattice x coordinates must increase");
  return t;
}

LatticeTriple to_lattice(const FactorizationTriple& t) {
  const OffsetQuad& q = t.quad;
  return {t.n, {t.A, t.A + q.a1, t.A + q.a2}, {t.B, t.B - q.b1, t.B - q.b2}};
}

FactorizationTriple to_factorization(const LatticeTriple& t) {
  OffsetQuad q = quad_from_triple({{{t.x[0], t.y[0]}, {t.x[1], t.y[1]}, {t.x[2], t.y[2]}}});
  return {t.x[0], t.y[0], t.n, q};
}

std::string_view to_string(CaseTag tag) {
  switch (tag) {
    case CaseTag::Case1: return "Case1";
    case CaseTag::Case2a: return "Case2a";
    case CaseTag::Case2b: return "Case2b";
    case CaseTag::Case3: return "Case3";
    case CaseTag::Case4: return "Case4";
    case CaseTag::Case5: return "Case5";
  }
  return "?";
}

CaseTag parse_case_tag(std::string_view name) {
  for (CaseTag tag : {CaseTag::Case1, CaseTag::Case2a, CaseTag::Case2b, CaseTag::Case3,
                      CaseTag::Case4, CaseTag::Case5}) {
    if (to_string(tag) == name) return tag;
  }
  throw invalid_input("unknown case tag: " + std::string(name));
}

std::optional<FactorizationTriple> solve_quad(const OffsetQuad& q) {
  if (!q.is_ordered()) return std::nullopt;
  const BigInt d = q.d();
  if (d <= 0) return std::nullopt;
  const BigInt num = big(q.b1) * q.b2 * (q.a2 - q.a1);
  if (num % d != 0) return std::nullopt;
  const BigInt B = num / d;
  if (B <= q.b2) return std::nullopt;
  // a1 B - b1 A = a1 b1  =>  A = a1 (B - b1) / b1
  const BigInt a_num = q.a1 * (B - q.b1);
  if (a_num % q.b1 != 0) return std::nullopt;
  FactorizationTriple t{a_num / q.b1, B, 0, q};
  t.n = t.A * t.B;
  if (!t.verify()) {
    throw std::logic_error("solve_quad produced a triple that fails re-multiplication");
  }
  return t;
}

OffsetQuad quad_from_triple(const std::array<std::pair<BigInt, BigInt>, 3>& points) {
  const auto& [x1, y1] = points[0];
  const auto& [x2, y2] = points[1];
  const auto& [x3, y3] = points[2];
  const BigInt n = x1 * y1;
  if (n < 1 || x1 < 1 || y3 < 1) throw invalid_input("factorizations must be positive");
  if (x2 * y2 != n || x3 * y3 != n) throw invalid_input("factorizations have different products");
  if (!(x1 < x2 && x2 < x3)) throw invalid_input("first components must be strictly increasing");
  return {narrow_offset(x2 - x1, "a1"), narrow_offset(y1 - y2, "b1"),
          narrow_offset(x3 - x1, "a2"), narrow_offset(y1 - y3, "b2")};
}

BigInt thm1_bound(const BigInt& C) { return C * C * C; }

Rational thm2_bound(const BigInt& C) { return Rational(C * (C - 1) * (C - 1), BigInt(4)); }

bool within_thm2_bound(const BigInt& v, const BigInt& C) { return 4 * v <= C * (C - 1) * (C - 1); }

CaseTag case_of(const OffsetQuad& q) {
  switch (q.a2 - q.b2) {
    case 0: return CaseTag::Case1;
    case 1: return CaseTag::Case2a;
    case -1: return CaseTag::Case2b;
    case 2: return CaseTag::Case3;
    case -2: return CaseTag::Case4;
    default: return CaseTag::Case5;
  }
}

CaseDecomposition classify(const FactorizationTriple& t) {
  CaseDecomposition c{case_of(t.quad), {}};
  c.witnesses = derive_witnesses(t, c.tag);
  decompose(t, c);
  return c;
}

Witnesses decompose(const FactorizationTriple& t, const CaseDecomposition& c) {
  const OffsetQuad& q = t.quad;
  const Witnesses& w = c.witnesses;
  check(t.verify(), t, "triple does not re-verify");
  check(c.tag == case_of(q), t, "case tag does not match a2 - b2");

  switch (c.tag) {
    case CaseTag::Case1: {
      check(t.B - t.A == q.a2, t, "Case1 requires B - A = a2");
      if (w.split_middle) {
        check(!w.M && t.A + q.a1 != t.B - q.b1, t, "split middle flagged but middle is square");
        check(w.d && *w.d == q.d() && *w.d >= 1, t, "Case1 d certificate");
      } else {
        check(w.M.has_value(), t, "Case1 needs M");
        const BigInt& M = *w.M;
        check(M * M == t.n, t, "M^2 != n");
        check(t.A + q.a1 == M && t.B - q.b1 == M, t, "A + a1 = B - b1 = M");
        const std::int64_t da = q.a2 - q.a1;
        const std::int64_t db = q.b2 - q.b1;
        check(big(da) * db == (da - db) * M, t, "(a2-a1)(b2-b1) = ((a2-a1)-(b2-b1))M");
      }
      break;
    }
    case CaseTag::Case2a:
    case CaseTag::Case2b:
    case CaseTag::Case3:
    case CaseTag::Case4: {
      const std::int64_t g = case_shift(c.tag);
      check(w.A_prime && w.B_prime && w.h && w.k && w.l, t, "missing Case2-4 witnesses");
      const BigInt& ap = *w.A_prime;
      check(ap >= 1 && g * t.A == q.a2 * ap, t, "g A = a2 A'");
      check(*w.B_prime == ap + g && g * t.B == q.b2 * *w.B_prime, t, "g B = b2 (A' + g)");
      const std::int64_t h = *w.h;
      const std::int64_t k = *w.k;
      check(0 < h && h < q.a2 && 0 < k && k < q.b2, t, "h, k out of range");
      check((t.A + h) * (t.B - q.b2 + k) == t.n, t, "middle factorization");
      const BigInt hk = big(h) * k;
      const BigInt far = big(q.a2 - h) * (q.b2 - k);
      check(far * ap == hk * (ap + g), t, "(a2-h)(b2-k)A' = hk(A'+g)");
      if (w.A_dprime) {
        check(g == 2 && ap == 2 * *w.A_dprime, t, "A' = 2A''");
        check(hk == *w.l * *w.A_dprime && far == *w.l * (*w.A_dprime + 1), t, "l with A''");
      } else {
        check(g == 1 || ap % 2 == 1, t, "even A' needs A''");
        check(hk == *w.l * ap && far == *w.l * (ap + g), t, "l with A'");
      }
      break;
    }
    case CaseTag::Case5:
      check(w.d && *w.d == q.d() && *w.d >= 1, t, "Case5 d certificate");
      break;
  }
  return w;
}

BigInt gap(const LatticeTriple& t) {
  const BigInt dx = t.x[2] - t.x[0];
  const BigInt dy = t.y[0] - t.y[2];
  return dx > dy ? dx : dy;
}

Cor1LowerCertificate cor1_lower_test(const BigInt& g, const BigInt& n) {
  Cor1LowerCertificate c;
  const BigInt base = 2 * g - 1;
  const BigInt cube = base * base * base;
  c.lhs = cube * cube;
  c.rhs = 1024 * n;
  c.holds = c.lhs > c.rhs;
  return c;
}

Cor1LowerCertificate cor1_lower_holds(const LatticeTriple& t) { return cor1_lower_test(gap(t), t.n); }

bool gj_lower_holds(const LatticeTriple& t) {
  const BigInt dx = t.x[2] - t.x[0];
  return t.n * dx * dx * dx >= 4 * t.x[0] * t.x[0] * t.x[0];
}

}  // namespace closefact::model
