// Parallel kernels against their serial references.
#include <benchmark/benchmark.h>

#include "plueckerlab/congruence/congruence.hpp"
#include "plueckerlab/groebner/ideal.hpp"
#include "plueckerlab/io/fixtures.hpp"
#include "plueckerlab/kernels/minors.hpp"

using namespace plab;

namespace {

const Congruence& generic() {
  static const Congruence c = build_congruence(io::builtin_web("palatini-generic").web);
  return c;
}

const Congruence& case1() {
  static const Congruence c = build_congruence(io::builtin_web("af-case1").web);
  return c;
}

void BM_MaximalMinors(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maximal_minors(generic().matrix()));
}
void BM_MaximalMinorsSerial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(maximal_minors_serial(generic().matrix()));
}

void run_basis(benchmark::State& state, const Congruence& c, bool parallel) {
  Ideal I(c.vars(), focal_generators(c, false));
  GbOptions opts;
  opts.parallel = parallel;
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(I, MonomialOrder::grevlex(), opts));
}

void BM_FocalBasis(benchmark::State& state) { run_basis(state, generic(), true); }
void BM_FocalBasisSerial(benchmark::State& state) { run_basis(state, generic(), false); }
void BM_ReducibleBasis(benchmark::State& state) { run_basis(state, case1(), true); }
void BM_ReducibleBasisSerial(benchmark::State& state) { run_basis(state, case1(), false); }

}  // namespace

BENCHMARK(BM_MaximalMinors)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_MaximalMinorsSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FocalBasis)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_FocalBasisSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducibleBasis)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ReducibleBasisSerial)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
