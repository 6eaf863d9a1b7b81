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

#include "kernel_rows.hpp"
#include "morita/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace morita::kernels {

namespace parallel {

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "matmul");
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "matmul: inner dimensions differ");
  Matrix c(a.field(), a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
#pragma omp parallel
  {
    std::vector<std::uint64_t> acc;
#pragma omp for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i)
      detail::matmul_row(a, b, static_cast<std::size_t>(i), c.row(static_cast<std::size_t>(i)), acc);
  }
  return c;
}

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t from_col) {
  const auto rows = static_cast<std::ptrdiff_t>(m.rows());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t r = 0; r < rows; ++r)
    if (static_cast<std::size_t>(r) != pivot_row)
      detail::eliminate_row(m, static_cast<std::size_t>(r), pivot_row, col, from_col);
}

Matrix kron_sum(std::span<const Matrix> left, std::span<const Matrix> right) {
  detail::check_kron_sum(left, right);
  Matrix out(left[0].field(), left[0].rows() * right[0].rows(), left[0].cols() * right[0].cols());
  const auto blocks = static_cast<std::ptrdiff_t>(left[0].rows());
  // Each i owns a disjoint band of output rows, so the sum order per entry
  // is the same as in the serial kernel.
#pragma omp parallel for schedule(dynamic)
  for (std::ptrdiff_t i = 0; i < blocks; ++i) detail::kron_sum_block(left, right, static_cast<std::size_t>(i), out);
  return out;
}

}  // namespace parallel

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

bool openmp_enabled() {
#ifdef _OPENMP
  return true;
#else
  return false;
#endif
}

namespace {

constexpr std::size_t kParallelWork = std::size_t{1} << 16;

bool worth_it(std::size_t work) { return max_threads() > 1 && work >= kParallelWork; }

}  // namespace

Matrix matmul(const Matrix& a, const Matrix& b) {
  if (worth_it(a.rows() * a.cols() * b.cols())) return parallel::matmul(a, b);
  return serial::matmul(a, b);
}

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t from_col) {
  if (worth_it(m.rows() * (m.cols() - from_col))) {
    parallel::eliminate(m, pivot_row, col, from_col);
    return;
  }
  serial::eliminate(m, pivot_row, col, from_col);
}

Matrix kron_sum(std::span<const Matrix> left, std::span<const Matrix> right) {
  if (!left.empty() && worth_it(left.size() * left[0].rows() * left[0].cols() * right[0].rows() * right[0].cols()))
    return parallel::kron_sum(left, right);
  return serial::kron_sum(left, right);
}

}  // namespace morita::kernels
