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

namespace morita::kernels::serial {

Matrix matmul(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "matmul");
  if (a.cols() != b.rows()) fail(ErrorCode::ShapeMismatch, "matmul: inner dimensions differ");
  Matrix c(a.field(), a.rows(), b.cols());
  std::vector<std::uint64_t> acc;
  for (std::size_t i = 0; i < a.rows(); ++i) detail::matmul_row(a, b, i, c.row(i), acc);
  return c;
}

void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t from_col) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (r != pivot_row) detail::eliminate_row(m, r, pivot_row, col, from_col);
}

Matrix kron_sum(std::span<const Matrix> left, std::span<const Matrix> right) {
  detail::check_kron_sum(left, right);
  Matrix out(left[0].field(), left[0].rows() * right[0].rows(), left[0].cols() * right[0].cols());
  for (std::size_t i = 0; i < left[0].rows(); ++i) detail::kron_sum_block(left, right, i, out);
  return out;
}

}  // namespace morita::kernels::serial
