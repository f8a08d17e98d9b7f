#include "closefact/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <stdexcept>
#include <thread>
#include <tuple>

namespace closefact::search {
namespace {

using model::FactorizationTriple;
using model::LatticeTriple;
using model::OffsetQuad;
using u64 = std::uint64_t;
using u128 = unsigned __int128;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void require_ceiling(std::int64_t C) {
  if (C < 2) throw std::invalid_argument("ceiling C must be at least 2");
}

// Running maximum with all attaining triples, in discovery order.
void track_max(std::optional<BigInt>& best, std::vector<FactorizationTriple>& at,
               const BigInt& v, const FactorizationTriple& t) {
  if (!best || v > *best) {
    best = v;
    at.clear();
  }
  if (v == *best) at.push_back(t);
}

// Partial result of one contiguous chunk of a gap scan.
struct GapChunk {
  u64 with_triple = 0;
  u64 triples_checked = 0;
  std::optional<MarginRecord> min_margin;
  std::vector<Violation> violations;
};

void offer_margin(std::optional<MarginRecord>& best, MarginRecord rec) {
  if (!best || rec.margin < best->margin) best = std::move(rec);
}

LatticeTriple lattice_from_words(u64 n, u64 x1, u64 x2, u64 x3) {
  return {BigInt(n), {BigInt(x1), BigInt(x2), BigInt(x3)},
          {BigInt(n / x1), BigInt(n / x2), BigInt(n / x3)}};
}

Violation lattice_violation(std::string rule, const LatticeTriple& t, std::string detail) {
  return {std::move(rule), t.n, model::to_factorization(t), std::move(detail)};
}

void scan_chunk(const arith::DivisorSieve& sieve, u64 lo, u64 hi, GapChunk& out) {
  std::vector<u64> ds;
  for (u64 n = lo; n <= hi; ++n) {
    sieve.divisors_of(n, ds);
    if (ds.size() < 3) continue;
    ++out.with_triple;

    std::size_t best = 0;
    u64 best_gap = 0;
    for (std::size_t i = 0; i + 2 < ds.size(); ++i) {
      const u64 x1 = ds[i];
      const u64 x3 = ds[i + 2];
      const u64 g = std::max(x3 - x1, n / x1 - n / x3);
      if (i == 0 || g < best_gap) {
        best = i;
        best_gap = g;
      }
      // n < 2^32, so n dx^3 < 2^128.
      const u128 dx = x3 - x1;
      ++out.triples_checked;
      if (static_cast<u128>(n) * dx * dx * dx < 4 * static_cast<u128>(x1) * x1 * x1) {
        const LatticeTriple t = lattice_from_words(n, x1, ds[i + 1], x3);
        out.violations.push_back(lattice_violation("gj_lower", t, "n (x3-x1)^3 < 4 x1^3"));
      }
    }

    const model::Cor1LowerCertificate cert = model::cor1_lower_test(BigInt(best_gap), BigInt(n));
    BigInt margin = cert.lhs - cert.rhs;
    if (!cert.holds || !out.min_margin || margin < out.min_margin->margin) {
      LatticeTriple t = lattice_from_words(n, ds[best], ds[best + 1], ds[best + 2]);
      if (!cert.holds) {
        out.violations.push_back(lattice_violation("cor1_lower", t, "(2 gap - 1)^6 <= 1024 n"));
      }
      offer_margin(out.min_margin, {std::move(t), BigInt(best_gap), std::move(margin)});
    }
  }
}

using TripleKey = std::tuple<BigInt, BigInt, OffsetQuad>;

TripleKey key_of(const FactorizationTriple& t) { return {t.n, t.A, t.quad}; }

}  // namespace

std::string_view to_string(ScanKind kind) {
  switch (kind) {
    case ScanKind::quad_scan: return "quad_scan";
    case ScanKind::gap_scan: return "gap_scan";
    case ScanKind::cross_check: return "cross_check";
  }
  return "?";
}

std::uint64_t enumerate_quads(
    std::int64_t C, const std::function<void(const OffsetQuad&, const FactorizationTriple&)>& sink) {
  require_ceiling(C);
  std::uint64_t tried = 0;
  for (std::int64_t a1 = 1; a1 < C; ++a1) {
    for (std::int64_t a2 = a1 + 1; a2 <= C; ++a2) {
      for (std::int64_t b1 = 1; b1 < C; ++b1) {
        for (std::int64_t b2 = b1 + 1; b2 <= C; ++b2) {
          ++tried;
          const OffsetQuad q{a1, b1, a2, b2};
          // d >= 1 is necessary; skip the solver otherwise.
          if ((a2 - a1) * b1 <= (b2 - b1) * a1) continue;
          if (auto t = model::solve_quad(q)) sink(q, *t);
        }
      }
    }
  }
  return tried;
}

std::vector<FactorizationTriple> collect_quads(std::int64_t C) {
  std::vector<FactorizationTriple> out;
  enumerate_quads(C, [&](const OffsetQuad&, const FactorizationTriple& t) { out.push_back(t); });
  return out;
}

ScanReport max_AB(std::int64_t C) {
  const Stopwatch clock;
  ScanReport r;
  r.kind = ScanKind::quad_scan;
  r.range_lo = C;
  r.range_hi = C;
  r.stats.candidates = enumerate_quads(C, [&](const OffsetQuad& q, const FactorizationTriple& t) {
    ++r.stats.solvable;
    track_max(r.max_A, r.attaining_A, t.A, t);
    track_max(r.max_B, r.attaining_B, t.B, t);
    const BigInt own = q.ceiling();
    const BigInt cube = model::thm1_bound(own);
    if (t.A >= cube || t.B >= cube) {
      r.violations.push_back({"thm1", t.n, t, "max(A, B) >= C^3 at C = " + own.str()});
    }
    if (own >= 10 && (!model::within_thm2_bound(t.A, own) || !model::within_thm2_bound(t.B, own))) {
      r.violations.push_back({"thm2", t.n, t, "max(A, B) > C(C-1)^2/4 at C = " + own.str()});
    }
  });
  if (r.max_A) {
    const BigInt top = std::max(*r.max_A, *r.max_B);
    r.within_thm2 = model::within_thm2_bound(top, BigInt(C));
    if (C >= 10 && !*r.within_thm2) {
      const auto& at = top == *r.max_A ? r.attaining_A : r.attaining_B;
      r.violations.push_back({"thm2", at.front().n, at.front(),
                              "scan maximum exceeds C(C-1)^2/4 at C = " + std::to_string(C)});
    }
  }
  r.stats.elapsed_seconds = clock.seconds();
  return r;
}

std::vector<FactorizationTriple> triples_for_n(const BigInt& n, TripleQuery query) {
  std::vector<FactorizationTriple> out;
  if (n < 2) return out;
  const std::vector<BigInt> ds = arith::divisors(arith::factorize(n)).divisors;
  const std::size_t tau = ds.size();
  if (tau < 3) return out;

  auto emit = [&](std::size_t i, std::size_t j, std::size_t k) {
    const BigInt y1 = n / ds[i];
    const BigInt y3 = n / ds[k];
    if (query.cap && (ds[k] - ds[i] > *query.cap || y1 - y3 > *query.cap)) return;
    const OffsetQuad q = model::quad_from_triple({{{ds[i], y1}, {ds[j], n / ds[j]}, {ds[k], y3}}});
    out.push_back({ds[i], y1, n, q});
  };

  if (query.consecutive_only) {
    for (std::size_t i = 0; i + 2 < tau; ++i) emit(i, i + 1, i + 2);
    return out;
  }
  for (std::size_t i = 0; i + 2 < tau; ++i) {
    for (std::size_t j = i + 1; j + 1 < tau; ++j) {
      if (query.cap && ds[j] - ds[i] >= *query.cap) break;
      for (std::size_t k = j + 1; k < tau; ++k) {
        if (query.cap && ds[k] - ds[i] > *query.cap) break;
        emit(i, j, k);
      }
    }
  }
  return out;
}

std::optional<LatticeTriple> min_gap_triple(const BigInt& n) {
  if (n < 2) return std::nullopt;
  const std::vector<BigInt> ds = arith::divisors(arith::factorize(n)).divisors;
  std::optional<LatticeTriple> best;
  BigInt best_gap;
  for (std::size_t i = 0; i + 2 < ds.size(); ++i) {
    LatticeTriple t = model::make_lattice_triple(n, {ds[i], ds[i + 1], ds[i + 2]});
    BigInt g = model::gap(t);
    if (!best || g < best_gap) {
      best = std::move(t);
      best_gap = std::move(g);
    }
  }
  return best;
}

ScanReport scan_gaps(std::uint64_t n_lo, std::uint64_t n_hi, GapScanOptions options) {
  if (n_lo < 2 || n_lo > n_hi) throw std::invalid_argument("scan range must satisfy 2 <= lo <= hi");
  if (options.workers == 0) throw std::invalid_argument("worker count must be at least 1");
  const Stopwatch clock;
  const arith::DivisorSieve sieve(n_hi, options.sieve_ceiling);

  const u64 span = n_hi - n_lo + 1;
  const u64 chunk_count = std::min<u64>(span, u64{options.workers} * 8);
  const u64 chunk_size = (span + chunk_count - 1) / chunk_count;
  std::vector<GapChunk> chunks((span + chunk_size - 1) / chunk_size);

  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t c = next++; c < chunks.size(); c = next++) {
      const u64 lo = n_lo + c * chunk_size;
      const u64 hi = std::min(n_hi, lo + chunk_size - 1);
      scan_chunk(sieve, lo, hi, chunks[c]);
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned w = 1; w < options.workers; ++w) pool.emplace_back(work);
  work();
  pool.clear();

  ScanReport r;
  r.kind = ScanKind::gap_scan;
  r.range_lo = n_lo;
  r.range_hi = n_hi;
  r.stats.candidates = span;
  for (GapChunk& c : chunks) {
    r.stats.solvable += c.with_triple;
    r.stats.triples_checked += c.triples_checked;
    if (c.min_margin) offer_margin(r.min_margin, std::move(*c.min_margin));
    for (Violation& v : c.violations) r.violations.push_back(std::move(v));
  }
  r.stats.elapsed_seconds = clock.seconds();
  return r;
}

ScanReport cross_check(std::uint64_t n_max, std::int64_t C) {
  if (n_max < 2) throw std::invalid_argument("cross_check needs n_max >= 2");
  require_ceiling(C);
  const Stopwatch clock;
  const BigInt limit = n_max;

  std::map<TripleKey, FactorizationTriple> from_quads;
  enumerate_quads(C, [&](const OffsetQuad&, const FactorizationTriple& t) {
    if (t.n <= limit) from_quads.emplace(key_of(t), t);
  });
  std::map<TripleKey, FactorizationTriple> from_divisors;
  for (u64 n = 2; n <= n_max; ++n) {
    for (FactorizationTriple& t : triples_for_n(BigInt(n), {C, false})) {
      from_divisors.emplace(key_of(t), std::move(t));
    }
  }

  ScanReport r;
  r.kind = ScanKind::cross_check;
  r.range_lo = n_max;
  r.range_hi = C;
  r.stats.candidates = from_quads.size();
  r.stats.solvable = from_divisors.size();
  for (const auto& [key, t] : from_quads) {
    if (!from_divisors.contains(key)) {
      r.violations.push_back({"missing_from_divisor_scan", t.n, t, "found only by quad enumeration"});
    }
  }
  for (const auto& [key, t] : from_divisors) {
    if (!from_quads.contains(key)) {
      r.violations.push_back({"missing_from_quad_scan", t.n, t, "found only by divisor enumeration"});
    }
  }
  std::sort(r.violations.begin(), r.violations.end(), [](const Violation& l, const Violation& r) {
    return key_of(*l.triple) < key_of(*r.triple);
  });
  r.stats.elapsed_seconds = clock.seconds();
  return r;
}

bool is_consecutive(const FactorizationTriple& t) {
  const BigInt mid = t.A + t.quad.a1;
  for (BigInt x = t.A + 1; x < t.A + t.quad.a2; ++x) {
    if (x != mid && t.n % x == 0) return false;
  }
  return true;
}

CaseCensus case_census(std::int64_t C) {
  CaseCensus census;
  census.C = C;
  enumerate_quads(C, [&](const OffsetQuad&, const FactorizationTriple& t) {
    ++census.total;
    try {
      const model::CaseDecomposition c = model::classify(t);
      model::decompose(t, c);
      ++census.counts[static_cast<std::size_t>(c.tag)];
      if (c.witnesses.split_middle) {
        ++census.split_middle;
        if (is_consecutive(t)) ++census.split_middle_consecutive;
      }
    } catch (const model::decomposition_failure& e) {
      census.failures.push_back({"decomposition", t.n, t, e.what()});
    }
  });
  return census;
}

}  // namespace closefact::search
