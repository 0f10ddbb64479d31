#pragma once

#include <ostream>

#include "tir/cli/run_config.hpp"
#include "tir/cli/table.hpp"

namespace tir::cli {

enum ExitCode : int { ok = 0, config_error = 2, domain_error = 3, tolerance_error = 4, io_error = 5 };

/// Computes the scenario's table. Library errors propagate. For `verify`
/// a red criterion is reported in the table, not thrown.
Table run_scenario(const RunConfig& cfg);

/// Runs and writes the artifact; maps error classes to exit codes and prints
/// module-qualified messages to `err`. `verify` exits with tolerance_error
/// when any criterion fails (after writing its report).
int run(const RunConfig& cfg, std::ostream& err);

/// Full command-line entry point.
int main_entry(int argc, const char* const* argv);

}  // namespace tir::cli
