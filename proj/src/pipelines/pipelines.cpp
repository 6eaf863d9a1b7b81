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

#include "morita/pipelines.hpp"

#include <algorithm>
#include <functional>
#include <random>

#include "morita/bimodule.hpp"
#include "morita/blocks.hpp"
#include "morita/meataxe.hpp"
#include "morita/morita.hpp"

namespace morita::pipelines {

namespace {

using io::json;

class Recorder {
 public:
  void step(const std::string& name, json result) {
    steps_.push_back({{"name", name}, {"result", std::move(result)}});
  }
  bool check(const std::string& name, bool ok, json detail = nullptr) {
    json c = {{"name", name}, {"passed", ok}};
    if (!detail.is_null()) c["detail"] = std::move(detail);
    checks_.push_back(std::move(c));
    if (!ok) ++failed_;
    return ok;
  }
  json steps() const { return steps_; }
  json checks() const { return checks_; }
  std::size_t failed() const { return failed_; }
  std::size_t count() const { return checks_.size(); }

 private:
  json steps_ = json::array();
  json checks_ = json::array();
  std::size_t failed_ = 0;
};

std::uint32_t param_p(const Scenario& s) { return s.params.value("p", s.field.characteristic()); }

// ---------------------------------------------------------------- modules

Rep sign_module(const Group& g, const Field& f) {
  std::vector<Matrix> gens;
  for (const auto& p : g.generators()) {
    std::size_t swaps = 0;
    std::vector<bool> seen(p.degree(), false);
    for (std::uint32_t x = 0; x < p.degree(); ++x) {
      if (seen[x]) continue;
      std::size_t len = 0;
      for (std::uint32_t y = x; !seen[y]; y = p(y)) {
        seen[y] = true;
        ++len;
      }
      swaps += len - 1;
    }
    Matrix m(f, 1, 1);
    m(0, 0) = swaps % 2 ? f.neg(1) : 1;
    gens.push_back(std::move(m));
  }
  return Rep::make_trusted(g, f, 1, std::move(gens));
}

Rep deleted_permutation(const Group& g, const Field& f) {
  const Rep p = permutation_rep(g, f);
  Matrix ones(f, g.degree(), 1);
  for (std::size_t i = 0; i < g.degree(); ++i) ones(i, 0) = 1;
  return quotient_rep(p, ones);
}

bool is_trivial_module(const Rep& v) {
  if (v.dim() != 1) return false;
  for (const auto& m : v.generator_images())
    if (!m.is_identity()) return false;
  return true;
}

LabeledRep module_from_spec(const json& spec, const Group& g, const Field& f) {
  if (spec.is_string()) {
    const std::string kind = spec.get<std::string>();
    if (kind == "trivial") return {kind, trivial_rep(g, f)};
    if (kind == "sign") return {kind, sign_module(g, f)};
    if (kind == "permutation") return {kind, permutation_rep(g, f)};
    if (kind == "regular") return {kind, regular_rep(g, f)};
    if (kind == "deleted_permutation") return {kind, deleted_permutation(g, f)};
    fail(ErrorCode::ParseError, "unknown module kind '" + kind + "'");
  }
  if (!spec.is_object() || !spec.contains("generators") || !spec["generators"].is_array())
    fail(ErrorCode::ParseError, "module needs a kind string or {\"generators\": [...]}");
  std::vector<Matrix> gens;
  for (const auto& m : spec["generators"]) gens.push_back(io::parse_matrix(m, f));
  return {spec.value("name", std::string("explicit")), Rep::make(g, f, std::move(gens))};
}

std::vector<Rep> simples_of(const Rep& v, std::uint64_t seed) {
  std::vector<Rep> out;
  for (auto& sf : split_into_simples(v, seed)) out.push_back(std::move(sf.module));
  std::stable_sort(out.begin(), out.end(), [](const Rep& a, const Rep& b) { return a.dim() < b.dim(); });
  return out;
}

std::optional<Matrix> nondegenerate_invariant_form(const Rep& v, std::uint64_t seed) {
  const auto basis = invariant_bilinear_space(v);
  for (const auto& x : basis)
    if (is_invertible(x)) return x;
  if (basis.size() < 2) return std::nullopt;
  std::mt19937_64 rng(seed);
  const Field& f = v.field();
  for (int attempt = 0; attempt < 200; ++attempt) {
    Matrix x(f, v.dim(), v.dim());
    for (const auto& b : basis) x += b.scaled(static_cast<Elem>(rng() % f.order()));
    if (is_invertible(x)) return x;
  }
  return std::nullopt;
}

Matrix hyperbolic(const Field& f, std::size_t n, bool antisymmetric) {
  Matrix x(f, 2 * n, 2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    x(i, n + i) = 1;
    x(n + i, i) = antisymmetric ? f.neg(1) : 1;
  }
  return x;
}

std::string dim_label(const std::string& prefix, std::size_t i, const Rep& v) {
  return prefix + "[" + std::to_string(i) + "] dim " + std::to_string(v.dim());
}

// Modules of the block cut out by e, built from cyclic submodules and
// quotients of e kG, direct sums, and block components of tensor products.
std::vector<LabeledRep> random_block_modules(const CentralElement& e, const std::vector<Rep>& simples,
                                             std::size_t count, std::uint64_t seed) {
  const Group& g = e.group();
  const Field& f = e.field();
  const Rep reg = regular_rep(g, f);
  const Matrix basis = column_basis(e.left_multiplication());
  const Rep block = submodule_rep(reg, basis);
  std::mt19937_64 rng(seed ^ 0x5851f42d4c957f2dULL);
  constexpr std::size_t kMaxDim = 24;

  auto cyclic = [&](bool quotient) -> std::optional<LabeledRep> {
    if (g.order() < 2) return std::nullopt;
    // u = e x (1 +- y_1) ... (1 +- y_k), k = 1..3
    const std::size_t x = rng() % g.order();
    auto u = e * GroupAlgebraElement::basis(g, f, x);
    std::string tag = "(x=" + std::to_string(x);
    const std::size_t factors = 1 + rng() % 3;
    for (std::size_t i = 0; i < factors; ++i) {
      const std::size_t y = 1 + rng() % (g.order() - 1);
      const bool plus = rng() % 2;
      const auto by = GroupAlgebraElement::basis(g, f, y);
      u = u * (plus ? GroupAlgebraElement::one(g, f) + by : GroupAlgebraElement::one(g, f) - by);
      tag += std::string(plus ? ",+" : ",-") + std::to_string(y);
    }
    tag += ")";
    if (u.is_zero()) return std::nullopt;
    const Matrix coords = *solve(basis, Matrix::column(f, u.coeffs()));
    const Matrix sub = spin(block, coords);
    if (sub.cols() == 0 || sub.cols() == block.dim()) return std::nullopt;
    if (quotient) return LabeledRep{"quotient" + tag, quotient_rep(block, sub)};
    return LabeledRep{"cyclic" + tag, submodule_rep(block, sub)};
  };
  auto base = [&]() -> std::optional<LabeledRep> {
    switch (rng() % 3) {
      case 0: {
        const std::size_t i = rng() % simples.size();
        return LabeledRep{"simple" + std::to_string(i), simples[i]};
      }
      case 1:
        return cyclic(false);
      default:
        return cyclic(true);
    }
  };

  std::vector<LabeledRep> out;
  for (std::size_t attempt = 0; out.size() < count && attempt < 50 * count; ++attempt) {
    std::optional<LabeledRep> m;
    switch (rng() % 4) {
      case 0:
      case 1:
        m = base();
        break;
      case 2: {
        auto a = base(), b = base();
        if (a && b) m = LabeledRep{a->label + "+" + b->label, direct_sum(a->module, b->module)};
        break;
      }
      default: {
        auto a = base(), b = base();
        if (!a || !b || a->module.dim() * b->module.dim() > kMaxDim) break;
        const Rep t = tensor_k(a->module, b->module);
        const Matrix comp = column_basis(e.act(t));
        if (comp.cols() == 0) break;
        m = LabeledRep{"e(" + a->label + "*" + b->label + ")", submodule_rep(t, comp)};
        break;
      }
    }
    if (!m || m->module.dim() > kMaxDim) continue;
    m->label = "random" + std::to_string(out.size()) + ":" + m->label;
    out.push_back(std::move(*m));
  }
  return out;
}

// ---------------------------------------------------------------- shared steps

json ebimodule_step(const EBimodule& eb) {
  return {{"normal_subgroup_order", eb.normal.order()},
          {"quotient_order", eb.quotient.group.order()},
          {"dim", eb.bimodule.dim()},
          {"not_p_solvable", eb.not_p_solvable},
          {"gram_hash", io::matrix_hash(eb.gram)},
          {"e", io::central_to_json(eb.e)}};
}

void check_ebimodule(const EBimodule& eb, Recorder& r) {
  r.check("e is a central idempotent", eb.e * eb.e == eb.e && eb.e.is_central());
  r.check("dim ekG = |G| / |O_p'(G)|", eb.bimodule.dim() * eb.normal.order() == eb.bimodule.right_group().order());
  bool commute = true;
  try {
    eb.bimodule.validate_commutation_exhaustive();
  } catch (const Error&) {
    commute = false;
  }
  r.check("left and right actions commute (all pairs)", commute);
  const FormClass c = classify_form(eb.gram);
  r.check("restricted delta form is symmetric and nondegenerate", c.symmetric && c.nondegenerate);
  r.check("restricted delta form is H x G-invariant (all pairs)", is_invariant_bimod_form(eb.bimodule, eb.gram));
  r.check("ekG is projective as a G-module", right_projective(eb.bimodule).projective);
}

std::vector<Rep> principal_simples(const EBimodule& eb, std::uint64_t seed) {
  return simples_of(block_module(eb.e), seed);
}

json transport_json(const TransportReport& t) {
  return {{"quotient_dim", t.quotient_dim},
          {"gram", io::matrix_to_json(t.gram)},
          {"gram_hash", io::matrix_hash(t.gram)},
          {"b", io::form_class_to_json(t.b_class)},
          {"B", io::form_class_to_json(t.B_class)},
          {"classification", io::form_class_to_json(t.classification)},
          {"descends", t.descends},
          {"h_invariant_all_elements", t.h_invariant},
          {"nondegenerate", t.nondegenerate}};
}

// Transport, relation oracle and chain checks for one self-dual module.
json certify_module(const Bimodule& m, const Matrix& b, const LabeledRep& v, std::uint64_t seed, Recorder& r) {
  json out = {{"module", v.label}};
  const auto form = nondegenerate_invariant_form(v.module, seed);
  if (!r.check("invariant form found: " + v.label, form.has_value())) return out;
  r.check("module form invariant under all of G: " + v.label, is_invariant_form(v.module, *form));
  const TensorModule t = tensor_over_kG(m, v.module);
  const TransportReport tr = transport_form(t, b, *form);
  out["B_hash"] = io::matrix_hash(*form);
  out["transport"] = transport_json(tr);
  r.check("transported form descends: " + v.label, tr.descends);
  r.check("transported form H-invariant (all elements): " + v.label, tr.h_invariant);
  r.check("transported form nondegenerate: " + v.label, tr.nondegenerate);
  const Group& g = m.right_group();
  if (g.order() <= 60) {
    const std::size_t full = full_group_relation_rank(m, v.module);
    out["relation_rank"] = {{"generators", t.relations.cols()}, {"all_elements", full}};
    r.check("generator relations equal full-group relations: " + v.label, full == t.relations.cols());
  }
  if (g.order() <= 24 && m.dim() * v.module.dim() <= 144) {
    const ChainMaps c = chain_maps(m, form_to_iso(b), v.module, form_to_iso(*form));
    out["chain"] = {{"composite_hash", io::matrix_hash(c.composite)},
                    {"direct_hash", io::matrix_hash(c.direct)},
                    {"equal", c.equal()}};
    r.check("chain composite equals direct formula: " + v.label, c.equal());
    r.check("rho_M o Lambda_M = id: " + v.label, c.rho_m * c.lambda_m == Matrix::identity(m.field(), m.dim()));
    r.check("hat map descends: " + v.label, c.hat_descends);
  }
  return out;
}

// ---------------------------------------------------------------- pipelines

void run_classify_forms(const Scenario& s, Recorder& r) {
  const Field& f = s.field;
  const bool fong = s.params.value("fong", false);
  const json spec = s.params.value("modules", json("simples"));
  json groups = json::array();
  for (std::size_t gi = 0; gi < s.groups.size(); ++gi) {
    const Group& g = s.groups[gi];
    std::vector<LabeledRep> mods;
    if (spec.is_string() && spec.get<std::string>() == "simples") {
      const auto simples = simples_of(regular_rep(g, f), s.seed);
      for (std::size_t i = 0; i < simples.size(); ++i) mods.push_back({dim_label("simple", i, simples[i]), simples[i]});
    } else if (spec.is_array()) {
      for (const auto& m : spec) mods.push_back(module_from_spec(m, g, f));
    } else {
      fail(ErrorCode::ParseError, "params.modules must be \"simples\" or an array");
    }
    json rows = json::array();
    for (std::size_t mi = 0; mi < mods.size(); ++mi) {
      const auto& [label, v] = mods[mi];
      const std::string tag = "group " + std::to_string(gi) + " " + label;
      const bool simple = meataxe_simple(v, s.seed).simple;
      const SelfDualResult sd = self_dual_type(v, false, s.seed);
      json row = {{"module", label},
                  {"dim", v.dim()},
                  {"simple", simple},
                  {"absolutely_irreducible", simple && is_absolutely_irreducible(v, s.seed)},
                  {"type", std::string(to_string(sd.type))},
                  {"form_space_dim", sd.space_dim}};
      if (sd.gram) {
        row["gram"] = io::matrix_to_json(*sd.gram);
        row["form_class"] = io::form_class_to_json(sd.form_class);
        r.check("returned form invariant under all of G: " + tag, is_invariant_form(v, *sd.gram));
      }
      if (f.characteristic() == 2 && sd.space_dim > 0) {
        const QuadraticTypeResult q = quadratic_type(v, s.seed);
        row["quadratic"] = {{"verdict", std::string(to_string(q.verdict))},
                            {"search", std::string(q.search)},
                            {"space_dim", q.space_dim}};
        if (q.witness) {
          row["quadratic"]["witness"] = io::matrix_to_json(*q.witness);
          r.check("quadratic witness invariant and nondegenerate: " + tag,
                  is_invariant_quadratic(v, *q.witness) && is_nondegenerate_quadratic(*q.witness));
        }
      }
      if (fong && simple && !is_trivial_module(v) && sd.space_dim > 0) {
        const auto alt = nondegenerate_alternating_form(v, s.seed);
        bool ok = alt.has_value();
        if (alt) {
          const FormClass c = classify_form(*alt);
          ok = c.alternating && c.nondegenerate && is_invariant_form(v, *alt);
          row["alternating_form"] = io::matrix_to_json(*alt);
        }
        r.check("nondegenerate alternating invariant form: " + tag, ok);
      }
      rows.push_back(std::move(row));
    }
    groups.push_back({{"group", io::group_to_json(g)}, {"modules", rows}});
  }
  r.step("classify", groups);
  if (s.params.contains("expect")) {
    for (const auto& e : s.params["expect"]) {
      const std::size_t gi = e.value("group", std::size_t{0});
      const std::size_t mi = e.at("module").get<std::size_t>();
      const auto& rows = groups.at(gi).at("modules");
      const bool ok = mi < rows.size() && rows[mi]["type"] == e.at("type");
      r.check("expected type " + e.at("type").get<std::string>() + " for group " + std::to_string(gi) + " module " +
                  std::to_string(mi),
              ok);
    }
  }
}

void run_example1(const Scenario& s, Recorder& r) {
  const Group& g = s.groups[0];
  const Field& f = s.field;
  const std::string which = s.params.value("block", std::string("principal"));
  const BlockDecomposition dec = central_primitive_idempotents_split(g, f);
  json blocks = json::array();
  std::vector<std::size_t> dims;
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
    dims.push_back(block_module(dec.idempotents[i]).dim());
    blocks.push_back({{"index", i}, {"principal", i == dec.principal_index}, {"block_dim", dims.back()}});
  }
  r.step("blocks", {{"field", dec.field.literal()}, {"count", dec.idempotents.size()}, {"blocks", blocks}});

  std::vector<std::size_t> chosen;
  if (which == "principal") {
    chosen.push_back(dec.principal_index);
  } else if (which == "nonprincipal_positive_defect") {
    json defects = json::array();
    for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
      if (i == dec.principal_index) continue;
      const auto simples = simples_of(block_module(dec.idempotents[i]), s.seed);
      // A block is a full matrix algebra exactly when it has defect zero.
      const bool defect_zero = simples.size() == 1 && simples[0].dim() * simples[0].dim() == dims[i];
      defects.push_back({{"index", i}, {"simples", simples.size()}, {"defect_zero", defect_zero}});
      if (!defect_zero) chosen.push_back(i);
    }
    r.step("defects", defects);
  } else {
    fail(ErrorCode::ParseError, "params.block must be principal or nonprincipal_positive_defect");
  }
  if (!r.check("exactly one block selected", chosen.size() == 1, {{"selected", chosen}})) return;
  const std::size_t bi = chosen[0];
  const auto rational = restrict_element(dec.idempotents[bi], f);
  const CentralElement e = rational ? *rational : dec.idempotents[bi];
  const Field& work = e.field();

  const auto simples = simples_of(block_module(e), s.seed);
  json rows = json::array();
  std::vector<std::size_t> sdims;
  const json expect = s.params.value("expect", json::object());
  const std::string want_type = expect.value("type", std::string());
  for (std::size_t i = 0; i < simples.size(); ++i) {
    const Rep& v = simples[i];
    const std::string label = dim_label("simple", i, v);
    sdims.push_back(v.dim());
    const SelfDualResult sd = self_dual_type(v, true, s.seed);
    const bool abs_irr = is_absolutely_irreducible(v, s.seed);
    json row = {{"module", label},
                {"dim", v.dim()},
                {"absolutely_irreducible", abs_irr},
                {"type", std::string(to_string(sd.type))},
                {"form_space_dim", sd.space_dim}};
    if (sd.gram) {
      row["gram"] = io::matrix_to_json(*sd.gram);
      row["form_class"] = io::form_class_to_json(sd.form_class);
      r.check("returned form invariant under all of G: " + label, is_invariant_form(v, *sd.gram));
    }
    rows.push_back(std::move(row));
    r.check("simple lies in the selected block: " + label, block_of_module(v, dec) == bi);
    r.check("absolutely irreducible: " + label, abs_irr);
    r.check("invariant form space is 1-dimensional: " + label, sd.space_dim == 1);
    if (!want_type.empty()) r.check("form type is " + want_type + ": " + label, to_string(sd.type) == want_type);
  }
  r.step("simples", {{"field", work.literal()}, {"block_index", bi}, {"modules", rows}});
  if (expect.contains("simple_dims")) {
    auto want = expect["simple_dims"].get<std::vector<std::size_t>>();
    std::sort(want.begin(), want.end());
    r.check("simple dimensions match", sdims == want, {{"found", sdims}, {"expected", want}});
  }
}

void run_theorem_a(const Scenario& s, Recorder& r) {
  const Group& g = s.groups[0];
  const EBimodule eb = e_bimodule(g, param_p(s), s.field);
  r.step("e_bimodule", ebimodule_step(eb));
  check_ebimodule(eb, r);
  const auto simples = principal_simples(eb, s.seed);
  std::vector<LabeledRep> mods;
  for (std::size_t i = 0; i < simples.size(); ++i) mods.push_back({dim_label("simple", i, simples[i]), simples[i]});
  const std::size_t n_random = s.params.value("random_modules", std::size_t{20});
  for (auto& m : random_block_modules(eb.e, simples, n_random, s.seed)) mods.push_back(std::move(m));
  r.check("random modules generated", mods.size() == simples.size() + n_random,
          {{"requested", n_random}, {"generated", mods.size() - simples.size()}});

  const TheoremAReport rep = verify_theorem_A(eb.bimodule, mods, s.seed);
  json rows = json::array();
  std::size_t n_self_dual = 0;
  for (const auto& row : rep.rows) {
    rows.push_back({{"module", row.label},
                    {"dim", row.dim},
                    {"image_dim", row.image_dim},
                    {"self_dual", row.self_dual},
                    {"image_self_dual", row.image_self_dual},
                    {"holds", row.holds()}});
    n_self_dual += row.self_dual;
  }
  r.step("theorem_a", {{"rows", rows}, {"self_dual", n_self_dual}, {"not_self_dual", rep.rows.size() - n_self_dual}});
  for (const auto& row : rep.rows) r.check("V self-dual iff M(x)V self-dual: " + row.label, row.holds());

  // The other direction of the equivalence: inflation from H.
  json inflations = json::array();
  const auto h_simples = simples_of(regular_rep(eb.quotient.group, s.field), s.seed);
  for (std::size_t i = 0; i < h_simples.size(); ++i) {
    const Rep& w = h_simples[i];
    const std::string label = dim_label("H-simple", i, w);
    const Rep infl = pullback(w, eb.quotient.proj);
    const TensorModule t = tensor_over_kG(eb.bimodule, infl);
    const bool back = is_isomorphic(t.h_module, w, s.seed).has_value();
    const bool sd_w = is_self_dual(w, s.seed), sd_infl = is_self_dual(infl, s.seed);
    inflations.push_back({{"module", label}, {"returns_to_W", back}, {"self_dual", sd_w}, {"inflation_self_dual", sd_infl}});
    r.check("M(x)Inf(W) = W: " + label, back);
    r.check("W self-dual iff Inf(W) self-dual: " + label, sd_w == sd_infl);
  }
  r.step("inflation", inflations);

  json certs = json::array();
  for (std::size_t i = 0; i < mods.size(); ++i)
    if (rep.rows[i].self_dual) certs.push_back(certify_module(eb.bimodule, eb.gram, mods[i], s.seed, r));
  r.step("transport", certs);
}

void run_theorem_b(const Scenario& s, Recorder& r) {
  const Group& g = s.groups[0];
  const Field& f = s.field;
  const EBimodule eb = e_bimodule(g, param_p(s), f);
  r.step("e_bimodule", ebimodule_step(eb));
  check_ebimodule(eb, r);
  const auto simples = principal_simples(eb, s.seed);
  std::vector<LabeledRep> mods;
  for (std::size_t i = 0; i < simples.size(); ++i) {
    const std::string label = dim_label("simple", i, simples[i]);
    if (!r.check("absolutely irreducible: " + label, is_absolutely_irreducible(simples[i], s.seed))) continue;
    if (!is_self_dual(simples[i], s.seed)) continue;
    mods.push_back({label, simples[i]});
  }
  r.check("self-dual simples found", !mods.empty());
  const TypeReport tr = verify_type_preservation(eb.bimodule, eb.gram, mods, s.seed);
  json rows = json::array();
  for (const auto& row : tr.rows) {
    rows.push_back({{"module", row.label},
                    {"type", std::string(to_string(row.type))},
                    {"image_type", std::string(to_string(row.image_type))},
                    {"transported", io::form_class_to_json(row.transported)},
                    {"holds", row.holds()}});
    r.check("type preserved: " + row.label, row.holds());
  }
  r.step("type_preservation", rows);

  // Sign rule on hyperbolic forms of V + V*, including non-self-dual V.
  std::vector<LabeledRep> pool(mods.begin(), mods.end());
  for (auto& m : random_block_modules(eb.e, simples, s.params.value("random_modules", std::size_t{6}), s.seed))
    pool.push_back(std::move(m));
  json signs = json::array();
  for (const auto& [label, v] : pool) {
    const Rep w = direct_sum(v, dual_rep(v));
    for (bool anti : {false, true}) {
      const Matrix B = hyperbolic(f, v.dim(), anti);
      const TransportReport t = transport_form(eb.bimodule, eb.gram, w, B);
      const bool ok = t.passed() && (anti ? t.classification.antisymmetric : t.classification.symmetric);
      const std::string kind = anti ? "antisymmetric" : "symmetric";
      signs.push_back({{"module", label + " + dual"},
                       {"B", kind},
                       {"quotient_dim", t.quotient_dim},
                       {"classification", io::form_class_to_json(t.classification)},
                       {"gram_hash", io::matrix_hash(t.gram)}});
      r.check("symmetric b with " + kind + " B gives " + kind + ": " + label + " + dual", ok);
    }
  }
  r.step("sign_rule", signs);
}

Rep projective_from_kind(const std::string& kind, const EBimodule& eb, const Group& g, const Field& f) {
  if (kind == "regular") return regular_rep(g, f);
  if (kind == "block") return block_module(eb.e);
  if (kind == "permutation") return permutation_rep(g, f);
  fail(ErrorCode::ParseError, "unknown projective kind '" + kind + "'");
}

json quadratic_side_json(const QuadraticSide& q) {
  json out = {{"projective", q.projective},
              {"verdict", std::string(to_string(q.quadratic.verdict))},
              {"search", std::string(q.quadratic.search)},
              {"space_dim", q.quadratic.space_dim},
              {"witness_nondegenerate", q.witness_nondegenerate},
              {"witness_invariant_all_elements", q.witness_invariant}};
  if (q.quadratic.witness) {
    out["witness"] = io::matrix_to_json(*q.quadratic.witness);
    out["witness_radical_dim"] = quadratic_radical(*q.quadratic.witness).cols();
  }
  return out;
}

void run_theorem_c(const Scenario& s, Recorder& r) {
  const Group& g = s.groups[0];
  const Field& f = s.field;
  if (f.characteristic() != 2) fail(ErrorCode::ParseError, "theorem_c needs characteristic 2");
  const EBimodule eb = e_bimodule(g, 2, f);
  r.step("e_bimodule", ebimodule_step(eb));
  check_ebimodule(eb, r);
  const auto kinds = s.params.value("projectives", std::vector<std::string>{"regular", "block"});
  json rows = json::array();
  for (const auto& kind : kinds) {
    const Rep p = projective_from_kind(kind, eb, g, f);
    json row = {{"module", kind}, {"dim", p.dim()}};
    try {
      const QuadraticTransportReport q = verify_quadratic_transport(eb.bimodule, eb.gram, p, s.seed);
      row["input"] = quadratic_side_json(q.input);
      row["output"] = quadratic_side_json(q.output);
      row["image_dim"] = q.image_dim;
      r.check("M(x)P projective: " + kind, q.output.projective);
      r.check("M(x)P of quadratic type with certified witness: " + kind,
              q.output.quadratic.verdict == QuadraticVerdict::yes && q.output.witness_nondegenerate &&
                  q.output.witness_invariant);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::PreconditionFailed) throw;
      row["precondition"] = e.what();
      r.check("P projective and of quadratic type: " + kind, false, e.what());
    }
    rows.push_back(std::move(row));
  }
  r.step("quadratic_transport", rows);
}

void run_blocks(const Scenario& s, Recorder& r) {
  const Group& g = s.groups[0];
  const Field& f = s.field;
  const std::uint32_t p = param_p(s);
  const BlockDecomposition dec = s.params.value("extend", true) ? central_primitive_idempotents_split(g, f)
                                                                : central_primitive_idempotents(g, f);
  const Field& df = dec.field;
  json idems = json::array();
  GroupAlgebraElement sum(g, df);
  bool orthogonal = true;
  for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
    const auto& ei = dec.idempotents[i];
    idems.push_back({{"index", i},
                     {"principal", i == dec.principal_index},
                     {"coefficients", io::central_to_json(ei)},
                     {"block_dim", block_module(ei).dim()}});
    sum = sum + ei;
    for (std::size_t j = 0; j < dec.idempotents.size(); ++j) {
      const auto prod = ei * dec.idempotents[j];
      orthogonal = orthogonal && (i == j ? prod == ei : prod.is_zero());
    }
    r.check("idempotent " + std::to_string(i) + " is central", ei.is_central());
  }
  r.step("idempotents", {{"field", df.literal()}, {"count", dec.idempotents.size()}, {"idempotents", idems}});
  r.check("e_i e_j = delta_ij e_i", orthogonal);
  r.check("sum of idempotents is 1", sum == GroupAlgebraElement::one(g, df));
  r.check("principal idempotent acts as 1 on the trivial module",
          block_of_module(trivial_rep(g, df), dec) == dec.principal_index);
  if (s.params.contains("expect_blocks"))
    r.check("number of blocks", dec.idempotents.size() == s.params["expect_blocks"].get<std::size_t>(),
            {{"found", dec.idempotents.size()}});
  if (is_p_solvable(g, p)) {
    const CentralElement e = extend_element(principal_block_idempotent_psolvable(g, p, f), df);
    GroupAlgebraElement dominated(g, df);
    json which = json::array();
    bool clean = true;
    for (std::size_t i = 0; i < dec.idempotents.size(); ++i) {
      const auto prod = e * dec.idempotents[i];
      if (prod == dec.idempotents[i]) {
        dominated = dominated + dec.idempotents[i];
        which.push_back(i);
      } else {
        clean = clean && prod.is_zero();
      }
    }
    r.step("averaging_idempotent", {{"e", io::central_to_json(e)}, {"dominates", which}});
    r.check("averaging idempotent e is a sum of block idempotents", clean && dominated == e);
    r.check("e dominates the principal block",
            std::find(which.begin(), which.end(), json(dec.principal_index)) != which.end());
  }
}

struct Entry {
  PipelineInfo info;
  std::function<void(const Scenario&, Recorder&)> run;
};

const std::vector<Entry>& registry() {
  static const std::vector<Entry> entries = {
      {{"classify_forms",
        "classify invariant bilinear (and, in characteristic 2, quadratic) forms of modules",
        {"build the listed modules, or the simple modules of the regular module",
         "decide simplicity and absolute irreducibility (MeatAxe)",
         "solve for the invariant bilinear forms and classify them",
         "in characteristic 2 search for a nondegenerate invariant quadratic form",
         "with fong=true: require a nondegenerate alternating form on every nontrivial self-dual simple"}},
       run_classify_forms},
      {{"example1",
        "self-dual simple modules of one block and the type of their forms",
        {"split the center of kG into block idempotents, extending the field if needed",
         "select the principal block or the unique non-principal block of positive defect",
         "chop the block module e kG into simple modules",
         "classify the unique invariant form of each simple"}},
       run_example1},
      {{"theorem_a",
        "V self-dual iff M (x)_kG V self-dual, for M = ekG",
        {"build ekG with its restricted delta form and check it",
         "collect the principal block simples and seeded random block modules",
         "compare self-duality of V and of M (x)_kG V",
         "check inflation from G/O_p'(G) as the inverse direction",
         "transport a nondegenerate form of every self-dual V and certify it",
         "for small cases, compare the explicit isomorphism chain with the direct formula"}},
       run_theorem_a},
      {{"theorem_b",
        "the type of a self-dual simple is preserved, with the sign rule for transported forms",
        {"build ekG with its symmetric restricted delta form",
         "for each absolutely irreducible self-dual principal block simple, compare form types on both sides",
         "transport symmetric and antisymmetric hyperbolic forms on V + V* and check the sign"}},
       run_theorem_b},
      {{"theorem_c",
        "quadratic type of projective modules is preserved in characteristic 2",
        {"build ekG with its restricted delta form",
         "certify each listed module projective (Higman) with a nondegenerate invariant quadratic form",
         "certify the image M (x)_kG P the same way"}},
       run_theorem_c},
      {{"blocks",
        "central primitive idempotents of kG",
        {"split the center by minimal polynomials of class sums",
         "check orthogonality, completeness and centrality by group algebra multiplication",
         "locate the principal block through the trivial module",
         "for p-solvable groups compare with the averaging idempotent over O_p'(G)"}},
       run_blocks},
  };
  return entries;
}

}  // namespace

const std::vector<PipelineInfo>& pipelines() {
  static const std::vector<PipelineInfo> infos = [] {
    std::vector<PipelineInfo> out;
    for (const auto& e : registry()) out.push_back(e.info);
    return out;
  }();
  return infos;
}

const PipelineInfo* find_pipeline(std::string_view name) {
  for (const auto& p : pipelines())
    if (p.name == name) return &p;
  return nullptr;
}

RunResult run(const Scenario& s) {
  Recorder r;
  bool completed = true;
  std::string error;
  for (const auto& e : registry()) {
    if (e.info.name != s.pipeline) continue;
    try {
      e.run(s, r);
    } catch (const Error& err) {
      if (err.code() == ErrorCode::ParseError) throw;
      completed = false;
      error = err.what();
    }
  }
  r.check("pipeline completed", completed, completed ? json(nullptr) : json(error));
  json groups = json::array();
  for (const auto& g : s.groups) groups.push_back(io::group_to_json(g));
  RunResult out;
  out.passed = r.failed() == 0;
  out.report = {{"scenario", s.name},
                {"description", s.description},
                {"pipeline", s.pipeline},
                {"field", s.field.literal()},
                {"seed", s.seed},
                {"input_hash", s.input_hash},
                {"groups", groups},
                {"steps", r.steps()},
                {"checks", r.checks()},
                {"summary", {{"checks", r.count()}, {"failed", r.failed()}}},
                {"passed", out.passed}};
  return out;
}

}  // namespace morita::pipelines
