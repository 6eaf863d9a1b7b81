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

#include <cstdint>
#include <span>
#include <vector>

#include "morita/matrix.hpp"

namespace morita::kernels::detail {

// Row i of A*B into `out`. `acc` is scratch of length cols(B).
inline void matmul_row(const Matrix& a, const Matrix& b, std::size_t i, std::span<Elem> out,
                       std::vector<std::uint64_t>& acc) {
  const Field& f = a.field();
  const std::size_t inner = a.cols();
  if (f.is_prime_field()) {
    const std::uint64_t p = f.characteristic();
    acc.assign(b.cols(), 0);
    for (std::size_t k = 0; k < inner; ++k) {
      const std::uint64_t aik = a(i, k);
      if (aik == 0) continue;
      const auto brow = b.row(k);
      for (std::size_t j = 0; j < brow.size(); ++j) acc[j] += aik * brow[j];
    }
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = static_cast<Elem>(acc[j] % p);
    return;
  }
  for (std::size_t k = 0; k < inner; ++k) f.axpy(out, a(i, k), b.row(k));
}

inline void eliminate_row(Matrix& m, std::size_t r, std::size_t pivot_row, std::size_t col, std::size_t from_col) {
  const Elem c = m(r, col);
  if (c == 0) return;
  const Field& f = m.field();
  const std::size_t len = m.cols() - from_col;
  f.axpy(m.row(r).subspan(from_col, len), f.neg(c), m.row(pivot_row).subspan(from_col, len));
}

// Rows i*rows(R) .. of sum_t kron(L_t, R_t).
inline void kron_sum_block(std::span<const Matrix> left, std::span<const Matrix> right, std::size_t i, Matrix& out) {
  const Field& f = out.field();
  for (std::size_t t = 0; t < left.size(); ++t) {
    const Matrix& l = left[t];
    const Matrix& r = right[t];
    for (std::size_t j = 0; j < l.cols(); ++j) {
      const Elem a = l(i, j);
      if (a == 0) continue;
      for (std::size_t k = 0; k < r.rows(); ++k)
        f.axpy(out.row(i * r.rows() + k).subspan(j * r.cols(), r.cols()), a, r.row(k));
    }
  }
}

inline void check_kron_sum(std::span<const Matrix> left, std::span<const Matrix> right) {
  if (left.size() != right.size() || left.empty()) fail(ErrorCode::ShapeMismatch, "kron_sum: term count");
  for (std::size_t t = 0; t < left.size(); ++t) {
    if (left[t].rows() != left[0].rows() || left[t].cols() != left[0].cols() || right[t].rows() != right[0].rows() ||
        right[t].cols() != right[0].cols())
      fail(ErrorCode::ShapeMismatch, "kron_sum: ragged terms");
    require_same_field(left[t].field(), right[t].field(), "kron_sum");
  }
}

}  // namespace morita::kernels::detail
