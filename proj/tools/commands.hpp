#pragma once

#include <iosfwd>

#include "config.hpp"

namespace mupart::cli {

// Machine-consumable exit codes.
inline constexpr int kExitPass = 0;
inline constexpr int kExitVerdictFail = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumeric = 3;

// Dispatches on config.command; writes the report to out and returns the
// exit code.  Config problems raise std::invalid_argument/std::domain_error,
// numeric failures raise the mupart error types; main() maps both.
int run_command(const ExperimentConfig& config, std::ostream& out);

// Resolved worker count: config.threads, else MUPART_THREADS, else hardware.
int thread_count(const ExperimentConfig& config);

}  // namespace mupart::cli
