#include <benchmark/benchmark.h>

#include "dzero/dzero.hpp"

namespace {

using namespace dzero;

RingPtr ring3() { return make_ring({"x", "y", "z"}, {1, 1, 1}); }

std::vector<SectionEntry> generic_section(const RingPtr& ring) {
  return {{parse_poly("x^2 + y*z", ring), 2},
          {parse_poly("y^2 - 2*x*z", ring), 2},
          {parse_poly("z^3 + x*y*z", ring), 3}};
}

void BM_MatrixRank(benchmark::State& state) {
  auto ring = ring3();
  Complex kos = koszul_complex(ring, generic_section(ring));
  const PolyMatrix d = kos.differential(-1);
  const long degree = state.range(0);
  for (auto _ : state) benchmark::DoNotOptimize(matrix_rank_in_degree(d, degree));
}
BENCHMARK(BM_MatrixRank)->Arg(6)->Arg(10)->Arg(14);

void BM_KoszulHomology(benchmark::State& state) {
  auto ring = ring3();
  Complex kos = koszul_complex(ring, generic_section(ring));
  const auto threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) benchmark::DoNotOptimize(homology_dimensions(kos, state.range(0), threads));
}
BENCHMARK(BM_KoszulHomology)->Args({8, 1})->Args({14, 1})->Args({14, 4});

void BM_VerifyExcess(benchmark::State& state) {
  auto ring = make_ring({"x", "y"}, {1, 1});
  ZeroLocusPresentation p(ring, {},
                          {{parse_poly("x*y", ring), 2}, {parse_poly("x^2", ring), 2}});
  for (auto _ : state) benchmark::DoNotOptimize(verify_excess(p, state.range(0)).pass);
}
BENCHMARK(BM_VerifyExcess)->Arg(8)->Arg(12);

void BM_Tensor(benchmark::State& state) {
  auto ring = ring3();
  Complex a = koszul_complex(ring, generic_section(ring));
  for (auto _ : state) benchmark::DoNotOptimize(tensor(a, a).total_rank());
}
BENCHMARK(BM_Tensor);

}  // namespace
BENCHMARK_MAIN();
