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

#include "morita/matrix.hpp"

#include <algorithm>
#include <utility>

#include "morita/kernels.hpp"
#include "morita/poly.hpp"

namespace morita {

Matrix::Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> data)
    : field_(f), rows_(rows), cols_(cols), data_(std::move(data)) {
  if (data_.size() != rows * cols) fail(ErrorCode::ShapeMismatch, "matrix data length does not match its shape");
  for (Elem e : data_)
    if (e >= f.order()) fail(ErrorCode::FieldMismatch, "matrix entry outside the field");
}

Matrix Matrix::identity(Field f, std::size_t n) {
  Matrix m(f, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_ints(Field f, const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  Matrix m(f, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) fail(ErrorCode::ShapeMismatch, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = f.from_int(rows[i][j]);
  }
  return m;
}

Matrix Matrix::column(Field f, std::span<const Elem> v) {
  return Matrix(f, v.size(), 1, std::vector<Elem>(v.begin(), v.end()));
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::scaled(Elem a) const {
  Matrix out(*this);
  field_.scale(out.data_, a);
  return out;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) fail(ErrorCode::ShapeMismatch, "block out of range");
  Matrix out(field_, nr, nc);
  for (std::size_t i = 0; i < nr; ++i) std::copy_n(row(r0 + i).begin() + static_cast<std::ptrdiff_t>(c0), nc, out.row(i).begin());
  return out;
}

Matrix Matrix::cols_subset(const std::vector<std::size_t>& which) const {
  Matrix out(field_, rows_, which.size());
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < which.size(); ++j) out(i, j) = (*this)(i, which[j]);
  return out;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  require_same_field(field_, b.field_, "set_block");
  if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) fail(ErrorCode::ShapeMismatch, "set_block out of range");
  for (std::size_t i = 0; i < b.rows_; ++i)
    std::copy(b.row(i).begin(), b.row(i).end(), row(r0 + i).begin() + static_cast<std::ptrdiff_t>(c0));
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](Elem e) { return e == 0; });
}

bool Matrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

Elem Matrix::trace() const {
  if (!is_square()) fail(ErrorCode::ShapeMismatch, "trace of a non-square matrix");
  Elem t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t = field_.add(t, (*this)(i, i));
  return t;
}

namespace {

void same_shape(const Matrix& a, const Matrix& b, const char* what) {
  require_same_field(a.field(), b.field(), what);
  if (a.rows() != b.rows() || a.cols() != b.cols()) fail(ErrorCode::ShapeMismatch, std::string(what) + ": shapes differ");
}

}  // namespace

Matrix operator+(const Matrix& a, const Matrix& b) {
  Matrix out(a);
  out += b;
  return out;
}

Matrix& Matrix::operator+=(const Matrix& b) {
  same_shape(*this, b, "matrix add");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] = field_.add(data_[i], b.data_[i]);
  return *this;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  same_shape(a, b, "matrix sub");
  Matrix out(a);
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = a.field_.sub(a.data_[i], b.data_[i]);
  return out;
}

Matrix operator-(const Matrix& a) {
  Matrix out(a);
  for (auto& e : out.data_) e = a.field_.neg(e);
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) { return kernels::matmul(a, b); }

std::string Matrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < cols_; ++j) {
      if (j) out += ", ";
      out += field_.format((*this)(i, j));
    }
    out += "]";
  }
  return out + "]";
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "hstack");
  if (a.rows() != b.rows()) fail(ErrorCode::ShapeMismatch, "hstack: row counts differ");
  Matrix out(a.field(), a.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(0, a.cols(), b);
  return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
  const Matrix parts[] = {a, b};
  return vstack(parts);
}

Matrix vstack(std::span<const Matrix> blocks) {
  if (blocks.empty()) fail(ErrorCode::ShapeMismatch, "vstack of nothing");
  std::size_t rows = 0;
  for (const auto& b : blocks) {
    require_same_field(blocks[0].field(), b.field(), "vstack");
    if (b.cols() != blocks[0].cols()) fail(ErrorCode::ShapeMismatch, "vstack: column counts differ");
    rows += b.rows();
  }
  Matrix out(blocks[0].field(), rows, blocks[0].cols());
  std::size_t r = 0;
  for (const auto& b : blocks) {
    out.set_block(r, 0, b);
    r += b.rows();
  }
  return out;
}

Matrix block_diag(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "block_diag");
  Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
  out.set_block(0, 0, a);
  out.set_block(a.rows(), a.cols(), b);
  return out;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  const Matrix l[] = {a};
  const Matrix r[] = {b};
  return kernels::kron_sum(l, r);
}

Echelon rref(const Matrix& a, bool with_transform) {
  const std::size_t ncols = a.cols();
  Matrix m = with_transform ? hstack(a, Matrix::identity(a.field(), a.rows())) : a;
  const Field& f = a.field();
  Echelon out;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t r = row;
    while (r < m.rows() && m(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != row) std::swap_ranges(m.row(r).begin(), m.row(r).end(), m.row(row).begin());
    const Elem inv = f.inv(m(row, col));
    f.scale(m.row(row).subspan(col), inv);
    kernels::eliminate(m, row, col, col);
    out.pivots.push_back(col);
    ++row;
  }
  if (with_transform) {
    out.reduced = m.block(0, 0, m.rows(), ncols);
    out.transform = m.block(0, ncols, m.rows(), m.rows());
  } else {
    out.reduced = std::move(m);
  }
  return out;
}

std::size_t rank(const Matrix& a) { return rref(a).rank(); }

Matrix nullspace(const Matrix& a) {
  const Echelon e = rref(a);
  const Field& f = a.field();
  std::vector<bool> is_pivot(a.cols(), false);
  for (auto c : e.pivots) is_pivot[c] = true;
  std::vector<std::size_t> free;
  for (std::size_t c = 0; c < a.cols(); ++c)
    if (!is_pivot[c]) free.push_back(c);
  Matrix out(f, a.cols(), free.size());
  for (std::size_t k = 0; k < free.size(); ++k) {
    out(free[k], k) = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) out(e.pivots[i], k) = f.neg(e.reduced(i, free[k]));
  }
  return out;
}

Matrix common_nullspace(std::span<const Matrix> blocks) {
  if (blocks.empty()) fail(ErrorCode::ShapeMismatch, "common_nullspace of nothing");
  const std::size_t n = blocks[0].cols();
  Matrix basis = Matrix::identity(blocks[0].field(), n);
  for (const auto& b : blocks) {
    if (b.cols() != n) fail(ErrorCode::ShapeMismatch, "common_nullspace: column counts differ");
    if (basis.cols() == 0) break;
    basis = basis * nullspace(b * basis);
  }
  return basis;
}

Matrix column_basis(const Matrix& a) {
  const Echelon e = rref(a.transpose());
  return e.reduced.block(0, 0, e.rank(), a.rows()).transpose();
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  require_same_field(a.field(), b.field(), "solve");
  if (a.rows() != b.rows()) fail(ErrorCode::ShapeMismatch, "solve: row counts differ");
  const Matrix aug = hstack(a, b);
  // Eliminate over all columns so a pivot landing in the right block reveals
  // an inconsistent system.
  const Echelon e = rref(aug);
  Matrix x(a.field(), a.cols(), b.cols());
  for (std::size_t i = 0; i < e.pivots.size(); ++i) {
    const std::size_t c = e.pivots[i];
    if (c >= a.cols()) return std::nullopt;
    for (std::size_t j = 0; j < b.cols(); ++j) x(c, j) = e.reduced(i, a.cols() + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::ShapeMismatch, "inverse of a non-square matrix");
  Echelon e = rref(a, true);
  if (e.rank() != a.rows()) return std::nullopt;
  return std::move(*e.transform);
}

Elem determinant(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::ShapeMismatch, "determinant of a non-square matrix");
  const Field& f = a.field();
  Matrix m = a;
  const std::size_t n = m.rows();
  Elem det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t r = col;
    while (r < n && m(r, col) == 0) ++r;
    if (r == n) return 0;
    if (r != col) {
      std::swap_ranges(m.row(r).begin(), m.row(r).end(), m.row(col).begin());
      det = f.neg(det);
    }
    const Elem piv = m(col, col);
    det = f.mul(det, piv);
    const Elem inv = f.inv(piv);
    for (std::size_t i = col + 1; i < n; ++i) {
      const Elem c = m(i, col);
      if (c == 0) continue;
      f.axpy(m.row(i).subspan(col), f.neg(f.mul(c, inv)), m.row(col).subspan(col));
    }
  }
  return det;
}

bool is_invertible(const Matrix& a) { return a.is_square() && rank(a) == a.rows(); }

Poly charpoly(const Matrix& a) {
  if (!a.is_square()) fail(ErrorCode::ShapeMismatch, "charpoly of a non-square matrix");
  const Field& f = a.field();
  const std::size_t n = a.rows();
  Matrix h = a;
  // Similarity transform to upper Hessenberg form.
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      std::swap_ranges(h.row(i).begin(), h.row(i).end(), h.row(j + 1).begin());
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    const Elem inv = f.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      const Elem u = f.mul(h(k, j), inv);
      if (u == 0) continue;
      f.axpy(h.row(k), f.neg(u), h.row(j + 1));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = f.add(h(r, j + 1), f.mul(u, h(r, k)));
    }
  }
  std::vector<Poly> p;
  p.reserve(n + 1);
  p.push_back(Poly::constant(f, 1));
  const Poly x = Poly::x(f);
  for (std::size_t m = 1; m <= n; ++m) {
    Poly next = (x - Poly::constant(f, h(m - 1, m - 1))) * p[m - 1];
    Elem t = 1;
    for (std::size_t i = 1; i < m; ++i) {
      t = f.mul(t, h(m - i, m - i - 1));
      const Elem c = f.mul(t, h(m - i - 1, m - 1));
      if (c != 0) next = next - p[m - i - 1].scaled(c);
    }
    p.push_back(std::move(next));
  }
  return p[n];
}

Matrix eval_poly(const Poly& poly, const Matrix& a) {
  require_same_field(poly.field(), a.field(), "eval_poly");
  if (!a.is_square()) fail(ErrorCode::ShapeMismatch, "eval_poly of a non-square matrix");
  const std::size_t n = a.rows();
  Matrix acc(a.field(), n, n);
  const auto& c = poly.coeffs();
  for (std::size_t i = c.size(); i-- > 0;) {
    acc = acc * a;
    for (std::size_t d = 0; d < n; ++d) acc(d, d) = a.field().add(acc(d, d), c[i]);
  }
  return acc;
}

Matrix vec(const Matrix& a) { return Matrix(a.field(), a.rows() * a.cols(), 1, a.data()); }

Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.rows() * v.cols() != rows * cols) fail(ErrorCode::ShapeMismatch, "unvec: length mismatch");
  return Matrix(v.field(), rows, cols, v.data());
}

}  // namespace morita

namespace morita {

std::vector<Elem> SpanBuilder::reduce(std::span<const Elem> v) const {
  if (v.size() != n_) fail(ErrorCode::ShapeMismatch, "SpanBuilder: vector length");
  std::vector<Elem> w(v.begin(), v.end());
  for (std::size_t k = 0; k < reduced_.size(); ++k) {
    const Elem c = w[pivots_[k]];
    if (c) field_.axpy(w, field_.neg(c), reduced_[k]);
  }
  return w;
}

bool SpanBuilder::contains(std::span<const Elem> v) const {
  const auto w = reduce(v);
  return std::all_of(w.begin(), w.end(), [](Elem e) { return e == 0; });
}

bool SpanBuilder::add(std::span<const Elem> v) {
  auto w = reduce(v);
  std::size_t piv = 0;
  while (piv < n_ && w[piv] == 0) ++piv;
  if (piv == n_) return false;
  field_.scale(w, field_.inv(w[piv]));
  reduced_.push_back(std::move(w));
  pivots_.push_back(piv);
  accepted_.emplace_back(v.begin(), v.end());
  return true;
}

Matrix SpanBuilder::basis() const {
  Matrix out(field_, n_, accepted_.size());
  for (std::size_t j = 0; j < accepted_.size(); ++j)
    for (std::size_t i = 0; i < n_; ++i) out(i, j) = accepted_[j][i];
  return out;
}

Matrix extend_matrix(const Matrix& a, const Field& target) {
  if (a.field() == target) return a;
  Matrix out(target, a.rows(), a.cols());
  for (std::size_t i = 0; i < a.data().size(); ++i) out.data()[i] = embed(a.field(), a.data()[i], target);
  return out;
}

}  // namespace morita
