#pragma once

#include "config.hpp"

#include <iosfwd>
#include <string>

namespace fock::cli {

enum ExitCode { kSuccess = 0, kRuntimeFailure = 1, kConfigError = 2 };

struct RunContext {
  ExperimentConfig config;
  bool quiet = false;
  std::ostream *out = nullptr; ///< progress and summaries (suppressed when quiet)
};

int cmd_matrix(const RunContext &ctx);
int cmd_commutator(const RunContext &ctx);
int cmd_criterion(const RunContext &ctx);
int cmd_decompose(const RunContext &ctx);
int cmd_selftest(std::ostream &out, bool quiet);

/// Parses argv, dispatches, and maps exceptions to exit codes.
int run(int argc, char **argv, std::ostream &out, std::ostream &err);

} // namespace fock::cli
