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

#pragma once

#include <cstddef>
#include <span>

#include "morita/matrix.hpp"

// Hot loops of the exact linear algebra. Each kernel exists twice: a serial
// reference and an OpenMP version that must agree with it bit for bit.
// The dispatching entry points pick the parallel one above a work threshold.

namespace morita::kernels {

namespace serial {

Matrix matmul(const Matrix& a, const Matrix& b);
/// Clears column `col` in every row except `pivot_row` (whose pivot is 1),
/// touching only columns >= `from_col`.
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t from_col);
/// sum_t kron(left[t], right[t]).
Matrix kron_sum(std::span<const Matrix> left, std::span<const Matrix> right);

}  // namespace serial

namespace parallel {

Matrix matmul(const Matrix& a, const Matrix& b);
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t from_col);
Matrix kron_sum(std::span<const Matrix> left, std::span<const Matrix> right);

}  // namespace parallel

/// Number of worker threads the parallel kernels will use (1 without OpenMP).
int max_threads();
bool openmp_enabled();

Matrix matmul(const Matrix& a, const Matrix& b);
void eliminate(Matrix& m, std::size_t pivot_row, std::size_t col, std::size_t from_col);
Matrix kron_sum(std::span<const Matrix> left, std::span<const Matrix> right);

}  // namespace morita::kernels
