// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include "closefact/family.hpp"
#include "closefact/model.hpp"
#include "closefact/report.hpp"
#include "closefact/search.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <thread>

using namespace closefact;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void criterion(int id, const char* name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (!o.pass) ++failures;
  std::printf("%s  %d. %-34s %8.2fs (budget %gs)  %s\n", o.pass ? "PASS" : "FAIL", id, name, s,
              budget_s, o.detail.c_str());
  std::fflush(stdout);
}

BigInt top(const search::ScanReport& r) { return std::max(*r.max_A, *r.max_B); }

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

std::string jsonl_of(const search::ScanReport& r) {
  std::ostringstream out;
  report::RecordWriter w(report::Format::jsonl, out);
  w.write(report::scan_record(r));
  w.flush();
  return out.str();
}

}  // namespace

int main() {
  criterion(1, "family reproduction", 1, [] {
    for (std::int64_t N : {1, 2, 5, 100}) {
      const family::FamilyInstance f = family::family_instance(N);
      const BigInt b = N;
      const BigInt n = b * (b + 1) * (b + 1) * (b + 2) * (2 * b + 1) * (2 * b + 3);
      if (f.n != n || !f.triple.verify() || !f.lattice.verify())
        return Outcome{false, "N=" + std::to_string(N)};
    }
    const family::FamilyInstance f1 = family::family_instance(1);
    const bool ok = f1.n == 180 && f1.lattice.x == std::array<BigInt, 3>{9, 10, 12} &&
                    f1.lattice.y == std::array<BigInt, 3>{20, 18, 15};
    return Outcome{ok, "N=1: (9,20) (10,18) (12,15) on 180"};
  });

  criterion(2, "C(C-1)^2/4 is sharp", 60, [] {
    const search::ScanReport r13 = search::max_AB(13);
    bool attained = false;
    for (const auto& t : r13.attaining_B) attained |= t.quad == model::OffsetQuad{5, 6, 11, 13};
    for (const auto& t : r13.attaining_A) attained |= t.quad == model::OffsetQuad{5, 6, 11, 13};
    if (top(r13) != 468 || model::thm2_bound(13) != Rational(468) || !attained)
      return Outcome{false, "max_AB(13) = " + to_string(top(r13))};
    for (std::int64_t C = 10; C <= 24; ++C) {
      const search::ScanReport r = search::max_AB(C);
      const Rational bound = model::thm2_bound(C);
      if (!r.clean() || Rational(top(r)) > bound)
        return Outcome{false, "C=" + std::to_string(C) + " exceeds bound"};
      if (C % 2 == 1 && C >= 11 && C <= 23 && Rational(top(r)) != bound)
        return Outcome{false, "C=" + std::to_string(C) + " below bound"};
    }
    return Outcome{true, "468 at (5,6,11,13); odd C in [11,23] attain; C in [10,24] within"};
  });

  criterion(3, "max(A,B) < C^3", 300, [] {
    for (std::int64_t C = 2; C <= 30; ++C) {
      const search::ScanReport r = search::max_AB(C);
      if (!r.clean()) return Outcome{false, "C=" + std::to_string(C) + ": " + r.violations[0].rule};
      if (r.max_A && top(r) >= model::thm1_bound(C))
        return Outcome{false, "C=" + std::to_string(C)};
    }
    return Outcome{true, "max(A,B) < C^3 for C in [2,30]"};
  });

  criterion(4, "gap lower bound", 600, [] {
    const search::ScanReport r = search::scan_gaps(2, 1'000'000, {workers()});
    std::string detail = std::to_string(r.stats.solvable) + " n, " +
                         std::to_string(r.stats.triples_checked) + " consecutive triples, " +
                         std::to_string(r.violations.size()) + " violations";
    if (r.min_margin) detail += ", tightest n=" + to_string(r.min_margin->triple.n);
    return Outcome{r.clean() && r.stats.candidates == 999'999, detail};
  });

  criterion(5, "family gap upper margin", 1, [] {
    const family::ThresholdReport r = family::family_threshold_scan(1000);
    const bool ok = r.N0 == 2 && r.failures == std::vector<std::int64_t>{1};
    return Outcome{ok, "N0=" + std::to_string(r.N0) + ", failures=" +
                           std::to_string(r.failures.size())};
  });

  criterion(6, "solver round trip", 60, [] {
    std::uint64_t n = 0;
    std::string bad;
    search::enumerate_quads(40, [&](const model::OffsetQuad& q, const model::FactorizationTriple& t) {
      ++n;
      const auto back = model::quad_from_triple(
          {{{t.A, t.B}, {t.A + q.a1, t.B - q.b1}, {t.A + q.a2, t.B - q.b2}}});
      if (!t.verify() || back != q) bad = "quad (" + std::to_string(q.a1) + "," +
                                          std::to_string(q.b1) + "," + std::to_string(q.a2) +
                                          "," + std::to_string(q.b2) + ")";
    });
    return Outcome{bad.empty() && n > 0, bad.empty() ? std::to_string(n) + " quads" : bad};
  });

  criterion(7, "case decomposition", 60, [] {
    const search::CaseCensus c = search::case_census(40);
    std::string detail = std::to_string(c.total) + " triples:";
    for (std::size_t i = 0; i < c.counts.size(); ++i)
      detail += " " + std::string(model::to_string(static_cast<model::CaseTag>(i))) + "=" +
                std::to_string(c.counts[i]);
    detail += ", split middle=" + std::to_string(c.split_middle) +
              ", failures=" + std::to_string(c.failures.size());
    return Outcome{c.failures.empty() && c.total > 0, detail};
  });

  criterion(8, "two-oracle agreement", 60, [] {
    const search::ScanReport r = search::cross_check(10'000, 10);
    return Outcome{r.clean() && r.stats.candidates == r.stats.solvable,
                   std::to_string(r.stats.candidates) + " triples each side"};
  });

  criterion(9, "determinism", 600, [] {
    const std::string one = jsonl_of(search::scan_gaps(2, 100'000, {1}));
    const std::string two = jsonl_of(search::scan_gaps(2, 100'000, {2}));
    const std::string eight = jsonl_of(search::scan_gaps(2, 100'000, {8}));
    return Outcome{one == two && one == eight,
                   "jsonl for 1, 2, 8 workers: " + std::to_string(one.size()) + " bytes"};
  });

  std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
