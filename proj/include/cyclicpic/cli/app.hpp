#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cyclicpic/sweep.hpp"

namespace cyclicpic::cli {

// Exit codes besides 0 and CLI11's usage errors.
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitDomainError = 2;

// 0 unless the sweep saw a mismatch, or a NotCovered tuple under --strict.
int sweep_exit_code(const SweepSummary& summary, bool strict);

// Runs the command line `args` (without the program name).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace cyclicpic::cli
