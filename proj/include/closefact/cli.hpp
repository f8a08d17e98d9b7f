#pragma once

#include "closefact/report.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace closefact::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

enum class Subcommand {
  solve,
  quad_from_points,
  family,
  scan_c,
  scan_gaps,
  triples,
  classify,
  cross_check,
};

struct RunConfig {
  Subcommand subcommand = Subcommand::solve;
  report::Format output_format = report::Format::jsonl;
  unsigned worker_count = 1;
  std::optional<std::string> output_path;
};

/// Runs one subcommand. args excludes the program name. Exit codes: 0 clean,
/// 1 violations or counterexamples found, 2 usage or input error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

int main(int argc, char** argv);

}  // namespace closefact::cli
