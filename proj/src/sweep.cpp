#include "cyclicpic/sweep.hpp"

#include <algorithm>
#include <exception>
#include <stdexcept>

#include <omp.h>

namespace cyclicpic {

namespace {

void check_range(const IntRange& r, long min, const char* name) {
  if (!r.empty() && r.lo < min)
    throw std::invalid_argument(std::string("sweep range for ") + name + " starts below " + std::to_string(min));
}

SweepSummary tally(std::vector<SweepEntry> entries) {
  SweepSummary s;
  for (const auto& e : entries) {
    switch (e.outcome.verdict) {
      case Verdict::Match: ++s.matches; break;
      case Verdict::Mismatch: ++s.mismatches; break;
      case Verdict::NotCovered: ++s.not_covered; break;
    }
  }
  s.entries = std::move(entries);
  return s;
}

int team_size(int jobs) { return jobs > 0 ? jobs : omp_get_max_threads(); }

}  // namespace

std::vector<SweepEntry> enumerate_grid(const SweepGrid& grid) {
  std::vector<SweepEntry> out;
  if (grid.g.empty() || grid.n.empty() || grid.d.empty()) return out;
  check_range(grid.g, 0, "g");
  check_range(grid.n, 2, "n");
  check_range(grid.d, 0, "d");
  for (long g = grid.g.lo; g <= grid.g.hi; ++g)
    for (long n = grid.n.lo; n <= grid.n.hi; ++n)
      for (long d = grid.d.lo; d <= grid.d.hi; ++d) {
        const long h = cover_genus(g, n, d);
        if (h < 0) continue;
        out.push_back({CoverParams{h, g, n}, d, {}});
      }
  std::sort(out.begin(), out.end(), [](const SweepEntry& a, const SweepEntry& b) { return a.params < b.params; });
  return out;
}

SweepSummary sweep_serial(const SweepGrid& grid) {
  auto entries = enumerate_grid(grid);
  for (auto& e : entries) e.outcome = verify(e.params);
  return tally(std::move(entries));
}

SweepSummary sweep_parallel(const SweepGrid& grid, int jobs) {
  auto entries = enumerate_grid(grid);
  const long count = static_cast<long>(entries.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 4) num_threads(team_size(jobs))
  for (long i = 0; i < count; ++i) {
    try {
      entries[i].outcome = verify(entries[i].params);
    } catch (...) {
#pragma omp critical(sweep_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return tally(std::move(entries));
}

std::vector<FgAbGroup> groups_serial(std::span<const Presentation> presentations) {
  std::vector<FgAbGroup> out;
  out.reserve(presentations.size());
  for (const auto& p : presentations) out.push_back(presentation_to_group(p));
  return out;
}

std::vector<FgAbGroup> groups_parallel(std::span<const Presentation> presentations, int jobs) {
  std::vector<FgAbGroup> out(presentations.size());
  const long count = static_cast<long>(presentations.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 8) num_threads(team_size(jobs))
  for (long i = 0; i < count; ++i) {
    try {
      out[i] = presentation_to_group(presentations[i]);
    } catch (...) {
#pragma omp critical(groups_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace cyclicpic
