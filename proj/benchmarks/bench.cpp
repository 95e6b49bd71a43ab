#include <benchmark/benchmark.h>

#include "expansive/multipoly.hpp"
#include "expansive/problem.hpp"
#include "expansive/torus.hpp"

namespace {

using namespace expansive;

const UniPoly& lehmer() {
  static UniPoly p = [] {
    LaurentPoly f = parse_polynomial("x1^10 + x1^9 - x1^7 - x1^6 - x1^5 - x1^4 - x1^3 + x1 + 1");
    return MultiPoly::from_laurent(f).to_unipoly(1);
  }();
  return p;
}

void bm_unit_circle_lehmer(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(unit_circle_root_count(lehmer()).count);
}
BENCHMARK(bm_unit_circle_lehmer);

void bm_sturm_count(benchmark::State& state) {
  UniPoly p = lehmer().squarefree_part();
  for (auto _ : state) benchmark::DoNotOptimize(sturm_count(p, Rat(-2), Rat(2)));
}
BENCHMARK(bm_sturm_count);

void bm_cyclotomic(benchmark::State& state) {
  for (auto _ : state) {
    CycValue v = CycValue::root_power(23, 5);
    benchmark::DoNotOptimize((v * v.conj()).is_one());
  }
}
BENCHMARK(bm_cyclotomic);

void bm_torus_line(benchmark::State& state) {
  IdealSpec ideal = IdealSpec::of({parse_polynomial("1 + x1 + x2")});
  for (auto _ : state) benchmark::DoNotOptimize(torus_intersection(ideal).status);
}
BENCHMARK(bm_torus_line);

void bm_torus_chain3(benchmark::State& state) {
  IdealSpec ideal = IdealSpec::of(
      {parse_polynomial("x1 - 2"), parse_polynomial("x2 - 3"), parse_polynomial("x3 - 5")});
  for (auto _ : state) benchmark::DoNotOptimize(torus_intersection(ideal).status);
}
BENCHMARK(bm_torus_chain3);

}  // namespace

BENCHMARK_MAIN();
