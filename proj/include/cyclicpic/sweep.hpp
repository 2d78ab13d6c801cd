#pragma once

// Grid verification and batch group computations. Each kernel has a serial
// reference and an OpenMP version; both return results in the same order.

#include <cstddef>
#include <span>
#include <vector>

#include "cyclicpic/fgab.hpp"
#include "cyclicpic/theorem.hpp"

namespace cyclicpic {

// Inclusive integer range; empty when lo > hi.
struct IntRange {
  long lo = 0;
  long hi = -1;

  bool empty() const { return lo > hi; }
  std::size_t size() const { return empty() ? 0 : static_cast<std::size_t>(hi - lo + 1); }
};

struct SweepGrid {
  IntRange g;
  IntRange n;
  IntRange d;
};

struct SweepEntry {
  CoverParams params;
  long d = 0;
  VerificationOutcome outcome;
};

struct SweepSummary {
  std::vector<SweepEntry> entries;  // ordered by (h, g, n)
  std::size_t matches = 0;
  std::size_t mismatches = 0;
  std::size_t not_covered = 0;

  std::size_t total() const { return entries.size(); }
};

// Every (g, n, d) in the grid with a non-negative cover genus h, sorted by (h, g, n).
// Throws std::invalid_argument for g < 0, n < 2 or d < 0 in a non-empty range.
std::vector<SweepEntry> enumerate_grid(const SweepGrid& grid);

SweepSummary sweep_serial(const SweepGrid& grid);
// jobs = 0 uses the OpenMP default team size.
SweepSummary sweep_parallel(const SweepGrid& grid, int jobs = 0);

std::vector<FgAbGroup> groups_serial(std::span<const Presentation> presentations);
std::vector<FgAbGroup> groups_parallel(std::span<const Presentation> presentations, int jobs = 0);

}  // namespace cyclicpic
