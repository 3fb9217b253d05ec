/*
   Copyright 2026 The LGS Toolkit Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// Serial references against the OpenMP kernels.

#include <benchmark/benchmark.h>

#include "lgs/estimator.hpp"
#include "lgs/matrix.hpp"
#include "lgs/params.hpp"
#include "lgs/stab_algebra.hpp"
#include "lgs/structural_lab.hpp"

namespace {

using namespace lgs;

MatFq random_matrix(const BaseField& f, std::size_t r, std::size_t c, std::uint64_t seed) {
  Rng rng(Rng::from_u64(seed));
  MatFq a(r, c);
  for (auto& x : a.data()) x = static_cast<fq_t>(rng.uniform(f.q()));
  return a;
}

template <Rref (*Fn)(const BaseField&, MatFq)>
void BM_rref(benchmark::State& state) {
  const BaseField f(2, static_cast<std::uint32_t>(state.range(1)));
  const auto n = static_cast<std::size_t>(state.range(0));
  const MatFq a = random_matrix(f, n, 2 * n, 1);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, a));
}
BENCHMARK_TEMPLATE(BM_rref, rref_serial)->Args({128, 1})->Args({384, 1})->Args({128, 4});
BENCHMARK_TEMPLATE(BM_rref, rref)->Args({128, 1})->Args({384, 1})->Args({128, 4});

template <MatFq (*Fn)(const BaseField&, const MatrixCodeBasis&, const MatrixCodeBasis&)>
void BM_left_stab_system(benchmark::State& state) {
  const BaseField f(2, 1);
  const auto m = static_cast<std::size_t>(state.range(0));
  const MatrixCodeBasis code =
      MatrixCodeBasis::from_unfolded(row_basis(f, random_matrix(f, 2 * m + 1, m * m, 2)), m);
  const MatrixCodeBasis dual = matrix_code_dual(f, code);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(f, code, dual));
}
BENCHMARK_TEMPLATE(BM_left_stab_system, left_stab_system_serial)->Arg(8)->Arg(12);
BENCHMARK_TEMPLATE(BM_left_stab_system, left_stab_system)->Arg(8)->Arg(12);

template <CensusResult (*Fn)(const CensusParams&, std::size_t, const Seed&)>
void BM_census(benchmark::State& state) {
  const CensusParams p{2, 8, 4, 17, 1};
  for (auto _ : state) benchmark::DoNotOptimize(Fn(p, static_cast<std::size_t>(state.range(0)), Rng::from_u64(3)));
}
BENCHMARK_TEMPLATE(BM_census, stabilizer_census_serial)->Arg(32)->Unit(benchmark::kMillisecond);
BENCHMARK_TEMPLATE(BM_census, stabilizer_census)->Arg(32)->Unit(benchmark::kMillisecond);

std::vector<SchemeParams> registry_params() {
  std::vector<SchemeParams> out;
  for (const auto& e : registry()) out.push_back(e.params);
  return out;
}

void BM_table_scan_serial(benchmark::State& state) {
  const auto rows = registry_params();
  for (auto _ : state) benchmark::DoNotOptimize(table_scan_serial(128, rows));
}
void BM_table_scan(benchmark::State& state) {
  const auto rows = registry_params();
  for (auto _ : state) benchmark::DoNotOptimize(table_scan(128, rows));
}
BENCHMARK(BM_table_scan_serial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_table_scan)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
