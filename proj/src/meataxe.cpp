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

#include "morita/meataxe.hpp"

#include <algorithm>
#include <random>

namespace morita {

namespace {

constexpr int kMaxAttempts = 200;
constexpr std::size_t kPoolLimit = 24;
constexpr std::size_t kSplitGuard = 64;

Matrix random_scalar_combo(const std::vector<Matrix>& pool, std::mt19937_64& rng) {
  const Field& f = pool[0].field();
  Matrix x = pool[rng() % pool.size()];
  for (int k = 0; k < 2; ++k) {
    const Elem c = static_cast<Elem>(rng() % f.order());
    if (c) x += pool[rng() % pool.size()].scaled(c);
  }
  return x;
}

}  // namespace

MeatAxeResult meataxe_simple(const Rep& v, std::uint64_t seed) {
  const std::size_t d = v.dim();
  if (d == 0) fail(ErrorCode::PreconditionFailed, "MeatAxe needs a nonzero module");
  const Field& f = v.field();
  std::vector<Matrix> pool = v.generator_images();
  if (pool.empty()) pool.push_back(Matrix::identity(f, d));
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    if (pool.size() < kPoolLimit) pool.push_back(pool[rng() % pool.size()] * pool[rng() % pool.size()]);
    const Matrix x = random_scalar_combo(pool, rng);
    auto fac = factor(charpoly(x), seed + static_cast<std::uint64_t>(attempt));
    std::stable_sort(fac.factors.begin(), fac.factors.end(),
                     [](const auto& a, const auto& b) { return a.first.degree() < b.first.degree(); });
    for (const auto& [fpoly, mult] : fac.factors) {
      const Matrix fx = eval_poly(fpoly, x);
      const Matrix ker = nullspace(fx);
      const Matrix vcol = ker.col(0);
      const Matrix sub = spin(v, vcol);
      if (sub.cols() < d) return MeatAxeResult{false, std::nullopt, sub};
      if (static_cast<long>(ker.cols()) != fpoly.degree()) continue;
      const Matrix wcol = nullspace(fx.transpose()).col(0);
      const Matrix dual_sub = spin_transposed(v, wcol);
      if (dual_sub.cols() < d) return MeatAxeResult{false, std::nullopt, nullspace(dual_sub.transpose())};
      return MeatAxeResult{true, NortonCertificate{x, fpoly, vcol, wcol}, Matrix()};
    }
  }
  fail(ErrorCode::GuardExceeded, "MeatAxe found no Norton element within the attempt budget");
}

bool verify_certificate(const Rep& v, const NortonCertificate& cert) {
  const Matrix fx = eval_poly(cert.factor, cert.element);
  if (!is_irreducible(cert.factor)) return false;
  if (static_cast<long>(nullspace(fx).cols()) != cert.factor.degree()) return false;
  if (cert.kernel_vector.is_zero() || !(fx * cert.kernel_vector).is_zero()) return false;
  if (cert.dual_kernel_vector.is_zero() || !(fx.transpose() * cert.dual_kernel_vector).is_zero()) return false;
  return spin(v, cert.kernel_vector).cols() == v.dim() && spin_transposed(v, cert.dual_kernel_vector).cols() == v.dim();
}

namespace {

void chop(const Rep& v, std::uint64_t& seed, std::vector<Rep>& out) {
  if (v.dim() == 0) return;
  const MeatAxeResult r = meataxe_simple(v, seed++);
  if (r.simple) {
    out.push_back(v);
    return;
  }
  chop(submodule_rep(v, r.submodule), seed, out);
  chop(quotient_rep(v, r.submodule), seed, out);
}

}  // namespace

std::vector<SimpleFactor> split_into_simples(const Rep& v, std::uint64_t seed) {
  if (v.dim() > kSplitGuard) fail(ErrorCode::GuardExceeded, "split_into_simples needs dim <= 64");
  std::vector<Rep> factors;
  std::uint64_t s = seed;
  chop(v, s, factors);
  std::vector<SimpleFactor> out;
  for (const auto& fct : factors) {
    auto it = std::find_if(out.begin(), out.end(), [&](const SimpleFactor& sf) {
      return sf.module.dim() == fct.dim() && is_isomorphic(sf.module, fct, seed).has_value();
    });
    if (it != out.end())
      ++it->multiplicity;
    else
      out.push_back({fct, 1});
  }
  return out;
}

bool is_absolutely_irreducible(const Rep& v, std::uint64_t seed) {
  return meataxe_simple(v, seed).simple && hom_space(v, v).size() == 1;
}

}  // namespace morita
