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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "morita/field.hpp"

namespace morita {

class Poly;

/// Dense row-major matrix over a Field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field f, std::size_t rows, std::size_t cols) : field_(f), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  Matrix(Field f, std::size_t rows, std::size_t cols, std::vector<Elem> data);

  static Matrix identity(Field f, std::size_t n);
  static Matrix zero(Field f, std::size_t rows, std::size_t cols) { return Matrix(f, rows, cols); }
  /// Builds a matrix from small integers (reduced into the prime field).
  static Matrix from_ints(Field f, const std::vector<std::vector<long>>& rows);
  static Matrix column(Field f, std::span<const Elem> v);

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Elem operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<Elem>& data() const { return data_; }
  std::vector<Elem>& data() { return data_; }

  Matrix transpose() const;
  Matrix scaled(Elem a) const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix cols_subset(const std::vector<std::size_t>& which) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  bool is_zero() const;
  bool is_identity() const;
  Elem trace() const;

  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a);
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  Matrix& operator+=(const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  std::string to_string() const;

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Elem> data_;
};

Matrix hstack(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix vstack(std::span<const Matrix> blocks);
Matrix block_diag(const Matrix& a, const Matrix& b);
/// kron(A,B)[(i,k),(j,l)] = A[i,j] B[k,l] with pair index i*rows(B)+k.
Matrix kron(const Matrix& a, const Matrix& b);

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
  /// T with T * input = reduced; present when requested.
  std::optional<Matrix> transform;

  std::size_t rank() const { return pivots.size(); }
};

/// Reduced row echelon form. Pivot = first nonzero entry in column order;
/// no other pivoting.
Echelon rref(const Matrix& a, bool with_transform = false);
std::size_t rank(const Matrix& a);
/// Columns form a basis of {v : A v = 0}, ordered by free column.
Matrix nullspace(const Matrix& a);
/// Basis of the common kernel of several blocks that share a column count,
/// computed by successive restriction.
Matrix common_nullspace(std::span<const Matrix> blocks);
/// Columns: an echelon basis of the column space of A.
Matrix column_basis(const Matrix& a);
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& a);
Elem determinant(const Matrix& a);
bool is_invertible(const Matrix& a);

/// Characteristic polynomial det(T I - A), via Hessenberg reduction.
Poly charpoly(const Matrix& a);
/// f(A) by Horner evaluation.
Matrix eval_poly(const Poly& f, const Matrix& a);

/// Incrementally built span of column vectors, kept in semi-echelon form
/// for membership tests. basis() returns the accepted vectors as given.
class SpanBuilder {
 public:
  SpanBuilder(Field f, std::size_t n) : field_(f), n_(n) {}

  /// Adds v if it is not already in the span; returns whether it was added.
  bool add(std::span<const Elem> v);
  bool contains(std::span<const Elem> v) const;
  std::size_t dim() const { return pivots_.size(); }
  std::size_t ambient_dim() const { return n_; }
  std::span<const Elem> vector(std::size_t i) const { return accepted_[i]; }
  /// Columns are the accepted vectors in insertion order.
  Matrix basis() const;

 private:
  std::vector<Elem> reduce(std::span<const Elem> v) const;
  Field field_;
  std::size_t n_;
  std::vector<std::vector<Elem>> reduced_;
  std::vector<std::size_t> pivots_;
  std::vector<std::vector<Elem>> accepted_;
};

/// Entrywise image under the canonical embedding into a larger field.
Matrix extend_matrix(const Matrix& a, const Field& target);

/// Flattens row-major.
Matrix vec(const Matrix& a);
Matrix unvec(const Matrix& v, std::size_t rows, std::size_t cols);

}  // namespace morita
