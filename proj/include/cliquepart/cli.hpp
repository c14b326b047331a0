#pragma once

// Command-line front end: gen, count, solve, verify, export, bench.
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <iosfwd>
#include <string>
#include <vector>

#include "cliquepart/core.hpp"

namespace cliquepart::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitUsage = 2;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);
// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

// Outcome of every check `verify` runs on one instance.
struct VerifyOutcome {
  bool passed = true;
  std::vector<std::string> failures;       // human-readable, with witnesses
  std::vector<std::string> conjecture;     // XFRP counterexamples (never fatal)
};

VerifyOutcome verify_instance(const WeightedInstance& inst, bool experimental);

// Value of CLIQUEPART_JOBS, else 1.
int default_jobs();

}  // namespace cliquepart::cli
