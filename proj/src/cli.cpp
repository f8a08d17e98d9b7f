#include "closefact/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>

namespace closefact::cli {
namespace {

class usage_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

BigInt big_arg(const std::string& text, const char* flag) {
  try {
    return parse_bigint(text);
  } catch (const std::invalid_argument&) {
    throw usage_error(std::string("--") + flag + ": not a decimal integer: " + text);
  }
}

std::int64_t int_arg(const std::string& text, const char* flag, std::int64_t lo,
                     std::int64_t hi = std::numeric_limits<std::int64_t>::max()) {
  const BigInt v = big_arg(text, flag);
  if (v < lo || v > hi) {
    throw usage_error(std::string("--") + flag + " must lie in [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "], got " + text);
  }
  return static_cast<std::int64_t>(v);
}

model::OffsetQuad quad_arg(const std::array<std::string, 4>& raw) {
  model::OffsetQuad q{int_arg(raw[0], "a1", 1), int_arg(raw[1], "b1", 1), int_arg(raw[2], "a2", 1),
                      int_arg(raw[3], "b2", 1)};
  if (!q.is_ordered()) throw usage_error("offsets must satisfy a1 < a2 and b1 < b2");
  return q;
}

std::string no_solution_reason(const model::OffsetQuad& q) {
  if (q.d() <= 0) return "d <= 0";
  return "no positive integral (A, B) with B > b2";
}

unsigned resolve_workers(const std::optional<std::string>& flag) {
  std::string text;
  const char* source = "workers";
  if (flag) {
    text = *flag;
  } else if (const char* env = std::getenv("CLOSEFACT_WORKERS"); env && *env) {
    text = env;
    source = "CLOSEFACT_WORKERS";
  } else {
    return 1;
  }
  return static_cast<unsigned>(int_arg(text, source, 1, 1024));
}

struct Args {
  std::array<std::string, 4> quad;
  std::array<std::string, 6> points;
  std::string n, from, to, threshold, c, cap, n_max;
  std::string sieve_ceiling = std::to_string(arith::DivisorSieve::kDefaultCeiling);
  bool consecutive = false;
  bool min_gap = false;
};

void add_quad_flags(CLI::App* sub, Args& a) {
  sub->add_option("--a1", a.quad[0], "offset a1")->required();
  sub->add_option("--b1", a.quad[1], "offset b1")->required();
  sub->add_option("--a2", a.quad[2], "offset a2")->required();
  sub->add_option("--b2", a.quad[3], "offset b2")->required();
}

int exit_for(const search::ScanReport& r) { return r.clean() ? kExitOk : kExitViolations; }

int dispatch(const RunConfig& config, const Args& a, report::RecordWriter& w) {
  switch (config.subcommand) {
    case Subcommand::solve: {
      const model::OffsetQuad q = quad_arg(a.quad);
      if (auto t = model::solve_quad(q))
        w.write(report::triple_record(*t));
      else
        w.write(report::no_solution_record(q, no_solution_reason(q)));
      return kExitOk;
    }
    case Subcommand::quad_from_points: {
      std::array<std::pair<BigInt, BigInt>, 3> pts;
      const char* names[] = {"x1", "y1", "x2", "y2", "x3", "y3"};
      for (std::size_t i = 0; i < 3; ++i) {
        pts[i] = {big_arg(a.points[2 * i], names[2 * i]), big_arg(a.points[2 * i + 1], names[2 * i + 1])};
      }
      model::OffsetQuad q;
      try {
        q = model::quad_from_triple(pts);
      } catch (const model::invalid_input& e) {
        throw usage_error(e.what());
      }
      const auto t = model::solve_quad(q);
      if (!t || t->A != pts[0].first || t->B != pts[0].second) {
        throw std::logic_error("quad_from_triple round trip failed");
      }
      w.write(report::triple_record(*t));
      return kExitOk;
    }
    case Subcommand::family: {
      if (!a.threshold.empty()) {
        w.write(report::threshold_record(
            family::family_threshold_scan(int_arg(a.threshold, "threshold", 2, 1'000'000))));
        return kExitOk;
      }
      std::int64_t lo, hi;
      if (!a.n.empty()) {
        lo = hi = int_arg(a.n, "n", 1, family::kMaxN);
      } else if (!a.from.empty() && !a.to.empty()) {
        lo = int_arg(a.from, "from", 1, family::kMaxN);
        hi = int_arg(a.to, "to", lo, family::kMaxN);
      } else {
        throw usage_error("family needs --n, --from/--to, or --threshold");
      }
      for (std::int64_t N = lo; N <= hi; ++N) w.write(report::family_record(family::family_instance(N)));
      return kExitOk;
    }
    case Subcommand::scan_c: {
      std::int64_t lo, hi;
      if (!a.c.empty()) {
        lo = hi = int_arg(a.c, "c", 2, 4096);
      } else if (!a.from.empty() && !a.to.empty()) {
        lo = int_arg(a.from, "from", 2, 4096);
        hi = int_arg(a.to, "to", lo, 4096);
      } else {
        throw usage_error("scan-c needs --c or --from/--to");
      }
      int code = kExitOk;
      for (std::int64_t C = lo; C <= hi; ++C) {
        const search::ScanReport r = search::max_AB(C);
        w.write(report::scan_record(r));
        code = std::max(code, exit_for(r));
      }
      return code;
    }
    case Subcommand::scan_gaps: {
      const auto ceiling = static_cast<std::uint64_t>(
          int_arg(a.sieve_ceiling, "sieve-ceiling", 2, std::numeric_limits<std::uint32_t>::max()));
      const auto lo = static_cast<std::uint64_t>(int_arg(a.from, "from", 2));
      const auto hi = static_cast<std::uint64_t>(int_arg(a.to, "to", static_cast<std::int64_t>(lo)));
      search::ScanReport r;
      try {
        r = search::scan_gaps(lo, hi, {config.worker_count, ceiling});
      } catch (const arith::budget_exceeded& e) {
        throw usage_error(e.what());
      }
      w.write(report::scan_record(r));
      return exit_for(r);
    }
    case Subcommand::triples: {
      const BigInt n = big_arg(a.n, "n");
      if (n < 2) throw usage_error("--n must be at least 2");
      if (a.min_gap) {
        if (auto t = search::min_gap_triple(n)) {
          report::Json j{{"kind", "lattice"}};
          j.update(report::lattice_json(*t));
          w.write(std::move(j));
        }
        return kExitOk;
      }
      search::TripleQuery query;
      query.consecutive_only = a.consecutive;
      if (!a.cap.empty()) query.cap = int_arg(a.cap, "cap", 2);
      for (const auto& t : search::triples_for_n(n, query)) w.write(report::triple_record(t));
      return kExitOk;
    }
    case Subcommand::classify: {
      const model::OffsetQuad q = quad_arg(a.quad);
      const auto t = model::solve_quad(q);
      if (!t) {
        w.write(report::no_solution_record(q, no_solution_reason(q)));
        return kExitOk;
      }
      try {
        w.write(report::classify_record(*t, model::classify(*t)));
      } catch (const model::decomposition_failure& e) {
        report::Json j{{"kind", "decomposition_failure"}, {"detail", e.what()}};
        w.write(std::move(j));
        return kExitViolations;
      }
      return kExitOk;
    }
    case Subcommand::cross_check: {
      const auto n_max = static_cast<std::uint64_t>(int_arg(a.n_max, "n-max", 2, 100'000'000));
      const std::int64_t C = int_arg(a.c, "c", 2, 4096);
      const search::ScanReport r = search::cross_check(n_max, C);
      w.write(report::scan_record(r));
      return exit_for(r);
    }
  }
  return kExitUsage;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Close factorizations n = AB = (A+a1)(B-b1) = (A+a2)(B-b2): solve, classify, scan.",
               "closefact"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "jsonl";
  std::optional<std::string> workers;
  std::optional<std::string> output;
  app.add_option("--format", format, "jsonl | csv | human")
      ->check(CLI::IsMember({"jsonl", "csv", "human"}));
  app.add_option("--workers", workers, "worker threads for scans (env CLOSEFACT_WORKERS)");
  app.add_option("--output,-o", output, "write records here instead of stdout");

  Args a;
  RunConfig config;
  auto pick = [&](Subcommand s) { return [&config, s] { config.subcommand = s; }; };

  auto* solve = app.add_subcommand("solve", "solve an offset quad for (A, B, n)");
  add_quad_flags(solve, a);
  solve->callback(pick(Subcommand::solve));

  auto* qfp = app.add_subcommand("quad-from-points", "offsets from three factorizations");
  const char* names[] = {"--x1", "--y1", "--x2", "--y2", "--x3", "--y3"};
  for (std::size_t i = 0; i < 6; ++i) qfp->add_option(names[i], a.points[i])->required();
  qfp->callback(pick(Subcommand::quad_from_points));

  auto* fam = app.add_subcommand("family", "extremal family member(s) or threshold scan");
  fam->add_option("--n", a.n, "single member N");
  fam->add_option("--from", a.from, "first N of a range");
  fam->add_option("--to", a.to, "last N of a range");
  fam->add_option("--threshold", a.threshold, "scan N = 1..N_max for the upper-margin threshold");
  fam->callback(pick(Subcommand::family));

  auto* scan_c = app.add_subcommand("scan-c", "max A, B over all solvable quads per ceiling C");
  scan_c->add_option("--c", a.c, "single ceiling");
  scan_c->add_option("--from", a.from, "first ceiling");
  scan_c->add_option("--to", a.to, "last ceiling");
  scan_c->callback(pick(Subcommand::scan_c));

  auto* gaps = app.add_subcommand("scan-gaps", "lower-bound scan over an n range");
  gaps->add_option("--from", a.from)->required();
  gaps->add_option("--to", a.to)->required();
  gaps->add_option("--sieve-ceiling", a.sieve_ceiling, "largest n the sieve may cover");
  gaps->callback(pick(Subcommand::scan_gaps));

  auto* trip = app.add_subcommand("triples", "divisor triples of one n");
  trip->add_option("--n", a.n)->required();
  trip->add_option("--cap", a.cap, "keep triples with a2, b2 <= cap");
  trip->add_flag("--consecutive", a.consecutive, "consecutive divisors only");
  trip->add_flag("--min-gap", a.min_gap, "only the minimal-gap consecutive triple");
  trip->callback(pick(Subcommand::triples));

  auto* cls = app.add_subcommand("classify", "case decomposition of a solvable quad");
  add_quad_flags(cls, a);
  cls->callback(pick(Subcommand::classify));

  auto* xc = app.add_subcommand("cross-check", "quad enumeration vs divisor enumeration");
  xc->add_option("--n-max", a.n_max)->required();
  xc->add_option("--c", a.c)->required();
  xc->callback(pick(Subcommand::cross_check));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    config.output_format = report::parse_format(format);
    config.worker_count = resolve_workers(workers);
    config.output_path = output;

    std::ofstream file;
    if (config.output_path) {
      file.open(*config.output_path, std::ios::binary);
      if (!file) throw usage_error("cannot open output file " + *config.output_path);
    }
    report::RecordWriter writer(config.output_format, config.output_path ? file : out);
    const int code = dispatch(config, a, writer);
    writer.flush();
    return code;
  } catch (const usage_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace closefact::cli
