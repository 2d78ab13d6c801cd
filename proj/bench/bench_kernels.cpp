// Serial reference vs OpenMP kernels: the closed-form verification sweep and a
// batch of random presentations.

#include <chrono>
#include <cstdio>
#include <random>
#include <vector>

#include <omp.h>

#include "cyclicpic/sweep.hpp"

using namespace cyclicpic;

namespace {

template <class F>
double seconds(F&& f, int repeats) {
  double best = 1e300;
  for (int r = 0; r < repeats; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double>(t1 - t0).count());
  }
  return best;
}

std::vector<Presentation> random_presentations(std::size_t count, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size(2, 6), entry(-50, 50);
  std::vector<Presentation> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    const int gens = size(rng);
    const int rels = size(rng);
    IntegerMatrix m(rels, gens);
    for (int r = 0; r < rels; ++r)
      for (int c = 0; c < gens; ++c) m(r, c) = entry(rng);
    out.emplace_back(gens, std::move(m));
  }
  return out;
}

}  // namespace

int main() {
  const int threads = omp_get_max_threads();
  std::printf("threads: %d\n", threads);

  const SweepGrid grid{{0, 5}, {2, 12}, {1, 12}};
  SweepSummary serial, parallel;
  const double ts = seconds([&] { serial = sweep_serial(grid); }, 3);
  const double tp = seconds([&] { parallel = sweep_parallel(grid); }, 3);
  std::printf("%-28s serial %9.4f s   omp %9.4f s   speedup %5.2fx   tuples %zu   agree %s\n", "sweep g0..5 n2..12 d1..12",
              ts, tp, ts / tp, serial.total(), serial.matches == parallel.matches ? "yes" : "NO");

  const auto batch = random_presentations(20000, 7);
  std::vector<FgAbGroup> gs, gp;
  const double bs = seconds([&] { gs = groups_serial(batch); }, 3);
  const double bp = seconds([&] { gp = groups_parallel(batch); }, 3);
  std::printf("%-28s serial %9.4f s   omp %9.4f s   speedup %5.2fx   count  %zu   agree %s\n", "smith batch 20000 x <=6x6",
              bs, bp, bs / bp, batch.size(), gs == gp ? "yes" : "NO");
  return (serial.matches == parallel.matches && gs == gp) ? 0 : 1;
}
