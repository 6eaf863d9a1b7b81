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

#include <random>

#include "doctest.h"
#include "morita/kernels.hpp"
#include "morita/matrix.hpp"
#include "morita/poly.hpp"

using namespace morita;

namespace {

Matrix random_matrix(const Field& f, std::size_t r, std::size_t c, std::mt19937_64& rng, int zero_bias = 0) {
  Matrix m(f, r, c);
  for (auto& e : m.data()) e = (zero_bias && rng() % 3 < static_cast<unsigned>(zero_bias)) ? 0 : static_cast<Elem>(rng() % f.order());
  return m;
}

// Determinant by cofactor expansion, as an oracle for small sizes.
Elem det_cofactor(const Matrix& a) {
  const Field& f = a.field();
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  Elem d = 0;
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::size_t> keep;
    for (std::size_t c = 0; c < n; ++c)
      if (c != j) keep.push_back(c);
    const Matrix minor = a.block(1, 0, n - 1, n).cols_subset(keep);
    Elem term = f.mul(a(0, j), det_cofactor(minor));
    d = (j % 2) ? f.sub(d, term) : f.add(d, term);
  }
  return d;
}

}  // namespace

TEST_CASE("rref examples") {
  const Field f3 = Field::make(3);
  auto e = rref(Matrix::identity(f3, 3));
  CHECK(e.rank() == 3);
  CHECK(e.reduced == Matrix::identity(f3, 3));
  CHECK(rank(Matrix::zero(f3, 2, 2)) == 0);
  CHECK(rank(Matrix::from_ints(f3, {{1, 2}, {2, 4}})) == 1);
  const Matrix a = Matrix::from_ints(f3, {{0, 2, 1}, {1, 1, 0}, {1, 0, 2}});
  auto t = rref(a, true);
  CHECK(*t.transform * a == t.reduced);
}

TEST_CASE("nullspace examples") {
  const Field f2 = Field::make(2), f3 = Field::make(3);
  CHECK(nullspace(Matrix::identity(f3, 3)).cols() == 0);
  CHECK(nullspace(Matrix::zero(f3, 2, 2)).cols() == 2);
  const Matrix n = nullspace(Matrix::from_ints(f2, {{1, 1}}));
  CHECK(n == Matrix::from_ints(f2, {{1}, {1}}));
  // Oracle: enumerate all 4 vectors of GF(2)^2.
  int count = 0;
  for (long a = 0; a < 2; ++a)
    for (long b = 0; b < 2; ++b)
      if ((a + b) % 2 == 0 && (a || b)) ++count;
  CHECK(count == 1);
}

TEST_CASE("solve examples") {
  const Field f3 = Field::make(3);
  const Matrix b = Matrix::from_ints(f3, {{1, 2}, {0, 2}});
  CHECK(*solve(Matrix::identity(f3, 2), b) == b);
  CHECK_FALSE(solve(Matrix::zero(f3, 2, 2), b).has_value());
  const Matrix a = Matrix::from_ints(f3, {{1, 2}, {0, 1}});
  const auto x = solve(a, Matrix::identity(f3, 2));
  REQUIRE(x.has_value());
  CHECK(*x == Matrix::from_ints(f3, {{1, 1}, {0, 1}}));
  CHECK(a * *x == Matrix::identity(f3, 2));
  CHECK_THROWS_AS(solve(a, Matrix::identity(f3, 3)), Error);
}

TEST_CASE("kron examples") {
  const Field f3 = Field::make(3);
  CHECK(kron(Matrix::identity(f3, 2), Matrix::identity(f3, 3)) == Matrix::identity(f3, 6));
  const Matrix a = Matrix::from_ints(f3, {{1, 2}, {0, 1}});
  CHECK(kron(a, Matrix::identity(f3, 1)) == a);
  CHECK(kron(Matrix::from_ints(f3, {{0, 1}, {1, 0}}), Matrix::from_ints(f3, {{2}})) ==
        Matrix::from_ints(f3, {{0, 2}, {2, 0}}));
  CHECK_THROWS_AS(kron(a, Matrix::identity(Field::make(2), 2)), Error);
}

TEST_CASE("linear algebra properties on random matrices") {
  std::mt19937_64 rng(7);
  for (const Field& f : {Field::make(2), Field::make(3), Field::make(3, 2)}) {
    for (int t = 0; t < 40; ++t) {
      const std::size_t r = 1 + rng() % 8, c = 1 + rng() % 8;
      const Matrix a = random_matrix(f, r, c, rng, static_cast<int>(t % 3));
      CHECK(rank(a) == rank(a.transpose()));
      const Matrix n = nullspace(a);
      CHECK(n.cols() == c - rank(a));
      CHECK((a * n).is_zero());
      CHECK(rank(n) == n.cols());
      // Consistent system: B = A X0.
      const Matrix x0 = random_matrix(f, c, 2, rng);
      const Matrix bb = a * x0;
      const auto x = solve(a, bb);
      REQUIRE(x.has_value());
      CHECK(a * *x == bb);

      const Matrix b2 = random_matrix(f, 2, 3, rng), c2 = random_matrix(f, 3, 2, rng);
      const Matrix d2 = random_matrix(f, 3, 3, rng), e2 = random_matrix(f, 3, 2, rng);
      CHECK(kron(b2, d2) * kron(c2, e2) == kron(b2 * c2, d2 * e2));

      const std::size_t n2 = 1 + rng() % 5;
      const Matrix p = random_matrix(f, n2, n2, rng), q = random_matrix(f, n2, n2, rng);
      CHECK(determinant(p * q) == f.mul(determinant(p), determinant(q)));
      CHECK(determinant(p) == det_cofactor(p));
      if (is_invertible(p)) CHECK(*inverse(p) * p == Matrix::identity(f, n2));
      // Cayley-Hamilton and charpoly(0) = (-1)^n det.
      const Poly cp = charpoly(p);
      CHECK(cp.degree() == static_cast<long>(n2));
      CHECK(eval_poly(cp, p).is_zero());
      const Elem c0 = cp.coeff(0);
      CHECK(c0 == (n2 % 2 ? f.neg(determinant(p)) : determinant(p)));
    }
  }
}

TEST_CASE("common_nullspace equals nullspace of the stack") {
  std::mt19937_64 rng(11);
  const Field f = Field::make(3);
  for (int t = 0; t < 20; ++t) {
    const Matrix a = random_matrix(f, 2, 6, rng), b = random_matrix(f, 2, 6, rng);
    const Matrix parts[] = {a, b};
    const Matrix k = common_nullspace(parts);
    CHECK(k.cols() == nullspace(vstack(a, b)).cols());
    CHECK((a * k).is_zero());
    CHECK((b * k).is_zero());
  }
}

TEST_CASE("vec identity for row-major flattening") {
  std::mt19937_64 rng(3);
  const Field f = Field::make(5);
  const Matrix a = random_matrix(f, 3, 3, rng), x = random_matrix(f, 3, 2, rng), b = random_matrix(f, 2, 2, rng);
  CHECK(vec(a * x * b) == kron(a, b.transpose()) * vec(x));
  CHECK(unvec(vec(x), 3, 2) == x);
}

TEST_CASE("parallel kernels agree with the serial reference") {
  std::mt19937_64 rng(5);
  for (const Field& f : {Field::make(3), Field::make(2, 2), Field::make(7)}) {
    const Matrix a = random_matrix(f, 37, 23, rng), b = random_matrix(f, 23, 41, rng);
    CHECK(kernels::serial::matmul(a, b) == kernels::parallel::matmul(a, b));
    Matrix m1 = random_matrix(f, 30, 30, rng);
    m1(4, 7) = 1;
    Matrix m2 = m1;
    kernels::serial::eliminate(m1, 4, 7, 0);
    kernels::parallel::eliminate(m2, 4, 7, 0);
    CHECK(m1 == m2);
    std::vector<Matrix> l, r;
    for (int t = 0; t < 6; ++t) {
      l.push_back(random_matrix(f, 4, 5, rng));
      r.push_back(random_matrix(f, 3, 2, rng));
    }
    const Matrix s = kernels::serial::kron_sum(l, r);
    CHECK(s == kernels::parallel::kron_sum(l, r));
    Matrix acc(f, 12, 10);
    for (int t = 0; t < 6; ++t) acc += kron(l[t], r[t]);
    CHECK(s == acc);
  }
}
