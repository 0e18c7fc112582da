// Serial reference loops against the OpenMP kernels on the same inputs.
#include <benchmark/benchmark.h>

#include "rackwork/enumerate.hpp"
#include "rackwork/groups.hpp"
#include "rackwork/serial.hpp"
#include "rackwork/ybe.hpp"

using namespace rackwork;

namespace {

const Structure& conj_s5() {
  static const Structure s = conjugation_rack(groups::symmetric(5));
  return s;
}

const Structure& pair_rack() {
  static const Structure s = product_with_dual(conjugation_rack(groups::symmetric3()));
  return s;
}

const Structure& conj_q8() {
  static const Structure s = conjugation_rack(groups::quaternion());
  return s;
}

void BM_rack_axioms_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::check_rack_axioms(conj_s5()));
}
void BM_rack_axioms_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_rack_axioms(conj_s5()));
}

void BM_qybe_serial(benchmark::State& st) {
  const auto f = exp_map(pair_rack(), 7);
  for (auto _ : st) benchmark::DoNotOptimize(serial::check_qybe(f));
}
void BM_qybe_parallel(benchmark::State& st) {
  const auto f = exp_map(pair_rack(), 7);
  for (auto _ : st) benchmark::DoNotOptimize(check_qybe(f));
}

void BM_exp_hom_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::check_exp_homomorphism(conj_q8(), 3));
}
void BM_exp_hom_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(check_exp_homomorphism(conj_q8(), 3));
}

void BM_enum_racks_serial(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(serial::count_racks(4));
}
void BM_enum_racks_parallel(benchmark::State& st) {
  for (auto _ : st) benchmark::DoNotOptimize(enumerate_racks(4, false).count);
}

}  // namespace

BENCHMARK(BM_rack_axioms_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_rack_axioms_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_qybe_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_qybe_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_exp_hom_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_exp_hom_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_enum_racks_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enum_racks_parallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
