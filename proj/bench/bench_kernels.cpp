#include <benchmark/benchmark.h>

#include "semiprim/kernels.hpp"
#include "semiprim/perm_group.hpp"

using namespace semiprim;

namespace {

PermGroup const& sym9() {
  static PermGroup const g = symmetric_group(9);
  return g;
}

PermGroup const& wreath() {
  // Sym(4) wr Sym(3) on 12 points, order 24^3 * 6
  static PermGroup const g = [] {
    std::vector<Perm> gens{Perm::from_cycles(12, {{0, 1, 2, 3}}),
                           Perm::from_cycles(12, {{0, 1}}),
                           Perm::from_cycles(12, {{0, 4, 8}, {1, 5, 9}, {2, 6, 10}, {3, 7, 11}}),
                           Perm::from_cycles(12, {{0, 4}, {1, 5}, {2, 6}, {3, 7}})};
    return PermGroup(12, gens);
  }();
  return g;
}

bool involution(Perm const& x) { return !x.is_identity() && (x * x).is_identity(); }

bool fixes_two(Perm const& x) { return x[0] == 0 && x[1] == 1; }

template <class Count>
void run_count(benchmark::State& state, PermGroup const& g, Count count) {
  std::uint64_t n = 0;
  for (auto _ : state) {
    n = count(g);
    benchmark::DoNotOptimize(n);
  }
  state.counters["elements"] = static_cast<double>(g.order());
  state.counters["hits"] = static_cast<double>(n);
}

void BM_count_involutions_serial(benchmark::State& s) {
  run_count(s, sym9(), [](auto const& g) { return kernels::serial::count(g, involution); });
}
void BM_count_involutions_parallel(benchmark::State& s) {
  run_count(s, sym9(), [](auto const& g) { return kernels::parallel::count(g, involution); });
}
void BM_mark_stabiliser_serial(benchmark::State& s) {
  run_count(s, wreath(),
            [](auto const& g) { return kernels::serial::mark(g, fixes_two).count(); });
}
void BM_mark_stabiliser_parallel(benchmark::State& s) {
  run_count(s, wreath(),
            [](auto const& g) { return kernels::parallel::mark(g, fixes_two).count(); });
}

}  // namespace

BENCHMARK(BM_count_involutions_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_count_involutions_parallel)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mark_stabiliser_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_mark_stabiliser_parallel)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
