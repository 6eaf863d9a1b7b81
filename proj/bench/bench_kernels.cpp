// Copyright 2026 The morita-forms Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Serial reference against OpenMP kernels.

#include <benchmark/benchmark.h>

#include <random>

#include "morita/kernels.hpp"

namespace {

using morita::Field;
using morita::Matrix;

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix m(f, r, c);
  for (auto& x : m.data()) x = static_cast<morita::Elem>(rng() % f.order());
  return m;
}

const Field& field() {
  static const Field f = Field::parse("gf(3^2)");
  return f;
}

template <Matrix (*Mul)(const Matrix&, const Matrix&)>
void bm_matmul(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix a = random_matrix(field(), n, n, 1), b = random_matrix(field(), n, n, 2);
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, b));
  state.SetComplexityN(state.range(0));
}

template <void (*Elim)(Matrix&, std::size_t, std::size_t, std::size_t)>
void bm_eliminate(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  Matrix base = random_matrix(field(), n, n, 3);
  for (std::size_t c = 0; c < n; ++c) base(0, c) = c == 0 ? 1 : base(0, c);
  for (auto _ : state) {
    state.PauseTiming();
    Matrix m = base;
    state.ResumeTiming();
    Elim(m, 0, 0, 0);
    benchmark::DoNotOptimize(m.data().data());
  }
}

template <Matrix (*Kron)(std::span<const Matrix>, std::span<const Matrix>)>
void bm_kron_sum(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<Matrix> left, right;
  for (std::uint64_t t = 0; t < 24; ++t) {
    left.push_back(random_matrix(field(), n, n, 10 + t));
    right.push_back(random_matrix(field(), n, n, 100 + t));
  }
  for (auto _ : state) benchmark::DoNotOptimize(Kron(left, right));
}

BENCHMARK(bm_matmul<morita::kernels::serial::matmul>)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_matmul<morita::kernels::parallel::matmul>)->Arg(64)->Arg(128)->Arg(256);
BENCHMARK(bm_eliminate<morita::kernels::serial::eliminate>)->Arg(256)->Arg(1024);
BENCHMARK(bm_eliminate<morita::kernels::parallel::eliminate>)->Arg(256)->Arg(1024);
BENCHMARK(bm_kron_sum<morita::kernels::serial::kron_sum>)->Arg(8)->Arg(16);
BENCHMARK(bm_kron_sum<morita::kernels::parallel::kron_sum>)->Arg(8)->Arg(16);

}  // namespace

BENCHMARK_MAIN();
