#include "hecke/json_io.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

Json big_to_json(const BigInt& v) {
  if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(v);
  return v.str();
}

BigInt big_from_json(const Json& j) {
  if (j.is_string()) return BigInt(j.get<std::string>());
  return BigInt(j.get<std::int64_t>());
}

template <class T>
T field_or(const Json& j, const char* key, T fallback) {
  return j.contains(key) ? j.at(key).get<T>() : fallback;
}

const Json& require(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing key \"") + key + "\"");
  return j.at(key);
}

}  // namespace

std::string permutation_key(const Permutation& w) {
  std::string out;
  for (int j = 0; j <= w.d(); ++j) out += (j ? " " : "") + std::to_string(w(j));
  return out;
}

Permutation permutation_from_key(const std::string& key) { return Permutation::parse(key); }

Json weight_to_json(std::span<const std::int64_t> n, int r) {
  return Json{{"d", static_cast<int>(n.size()) - 1}, {"r", r}, {"n", Weight(n.begin(), n.end())}};
}

BalancedWeight weight_from_json(const Json& j) {
  BalancedWeight w{require(j, "n").get<Weight>(), require(j, "r").get<int>()};
  if (w.n.size() < 2) throw ParseError("weight needs at least two entries");
  if (j.contains("d") && j.at("d").get<int>() != w.d()) throw SizeMismatchError("weight: d disagrees with length of n");
  return w;
}

Json nabla_to_json(const NablaFunction& nabla) {
  Json entries = Json::object();
  const auto& group = WeylGroup::get(nabla.d);
  for (std::size_t idx = 0; idx < group.size(); ++idx) entries[permutation_key(group[idx])] = nabla.at(idx);
  return Json{{"d", nabla.d}, {"entries", entries}};
}

NablaFunction nabla_from_json(const Json& j) {
  NablaFunction out{require(j, "d").get<int>(), {}};
  const auto& group = WeylGroup::get(out.d);
  const auto& entries = require(j, "entries");
  if (entries.size() != group.size()) throw SizeMismatchError("nabla: expected one entry per element of W");
  out.values.assign(group.size(), 0);
  for (const auto& [key, value] : entries.items()) {
    const auto w = permutation_from_key(key);
    if (w.d() != out.d) throw SizeMismatchError("nabla: permutation " + key + " has the wrong size");
    out.values[group.index_of(w)] = value.get<std::int64_t>();
  }
  return out;
}

Json character_to_json(const CharacterData& c) {
  return Json{{"d", c.d},           {"q", c.q},           {"r", c.r},
              {"theta_exp", c.theta_exp}, {"pi_ord", c.pi_ord}, {"unit_exp", c.unit_exp}};
}

CharacterData character_from_json(const Json& j) {
  const int d = require(j, "d").get<int>();
  const auto len = static_cast<std::size_t>(d) + 1;
  const std::vector<std::int64_t> zeros(len, 0);
  auto c = make_character(field_or(j, "theta_exp", zeros), require(j, "pi_ord").get<std::vector<std::int64_t>>(),
                          field_or(j, "unit_exp", zeros), require(j, "q").get<int>(), require(j, "r").get<int>());
  if (c.d != d) throw SizeMismatchError("character: d disagrees with the vector lengths");
  return c;
}

Json scalar_to_json(const Scalar& s) {
  Json terms = Json::array();
  for (std::size_t i = 0; i < s.coeffs().size(); ++i) {
    const auto& c = s.coeffs()[i];
    if (c.is_zero()) continue;
    Json term = Json::array({static_cast<int>(i), c.q_exp});
    for (const auto& x : c.coeffs) term.push_back(big_to_json(x));
    terms.push_back(term);
  }
  return Json{{"pi_deg_coeffs", terms}};
}

Scalar scalar_from_json(const Json& j, const ScalarRingPtr& ring) {
  std::vector<CycInt> coeffs(static_cast<std::size_t>(ring->r()), ring->cyc_zero());
  for (const auto& term : require(j, "pi_deg_coeffs")) {
    if (!term.is_array() || term.size() != static_cast<std::size_t>(ring->degree()) + 2)
      throw ParseError("scalar term must be [pi_degree, den_exp, coefficients...]");
    const int deg = term[0].get<int>();
    if (deg < 0 || deg >= ring->r()) throw ParseError("scalar pi-degree out of range");
    CycInt c;
    c.q_exp = term[1].get<int>();
    if (c.q_exp < 0) throw ParseError("scalar denominator exponent must be non-negative");
    for (std::size_t k = 2; k < term.size(); ++k) c.coeffs.push_back(big_from_json(term[k]));
    coeffs[static_cast<std::size_t>(deg)] = ring->cyc_add(coeffs[static_cast<std::size_t>(deg)], c);
  }
  return Scalar::from_coefficients(ring, std::move(coeffs));
}

Json fq_to_json(const FqElement& x) { return x.coefficients(); }

FqElement fq_from_json(const Json& j, const FqFieldPtr& field) {
  if (j.is_number_integer()) return FqElement::from_int(field, j.get<std::int64_t>());
  auto c = j.get<std::vector<int>>();
  if (c.size() != static_cast<std::size_t>(field->f())) throw ParseError("F_q element needs f coefficients");
  for (int x : c)
    if (x < 0 || x >= field->p()) throw ParseError("F_q coefficient out of range");
  return {field, field->from_coefficients(c)};
}

namespace {

template <class T, class F>
Json matrix_json(const Matrix<T>& m, int d, F&& encode) {
  Json basis = Json::array();
  for (const auto& w : WeylGroup::get(d).elements()) basis.push_back(permutation_key(w));
  Json entries = Json::array();
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (!(m(r, c) == m.zero())) entries.push_back(Json::array({r, c, encode(m(r, c))}));
  return Json{{"basis", basis}, {"entries", entries}};
}

}  // namespace

Json scalar_matrix_to_json(const Matrix<Scalar>& m, int d) { return matrix_json(m, d, scalar_to_json); }

Json fq_matrix_to_json(const FqMatrix& m, int d) { return matrix_json(m, d, fq_to_json); }

Json sigma_to_json(const SigmaFunction& sigma) {
  Json values = Json::object();
  const auto& group = WeylGroup::get(sigma.d);
  for (std::size_t idx = 0; idx < group.size(); ++idx)
    if (sigma.values[idx]) values[permutation_key(group[idx])] = *sigma.values[idx];
  return Json{{"d", sigma.d}, {"values", values}};
}

SigmaFunction sigma_from_json(const Json& j) {
  SigmaFunction out{require(j, "d").get<int>(), {}};
  const auto& group = WeylGroup::get(out.d);
  out.values.assign(group.size(), std::nullopt);
  for (const auto& [key, value] : require(j, "values").items()) {
    const auto w = permutation_from_key(key);
    if (w.d() != out.d) throw SizeMismatchError("sigma: permutation " + key + " has the wrong size");
    if (!ascends(w, out.d)) throw DomainError("sigma: " + key + " is not in W^{s_d}");
    out.values[group.index_of(w)] = value.get<int>();
  }
  for (std::size_t idx = 0; idx < group.size(); ++idx)
    if (ascends(group[idx], out.d) && !out.values[idx])
      throw DomainError("sigma: missing value at " + permutation_key(group[idx]));
  return out;
}

Json partial_to_json(const PartialFunction& partial) {
  Json values = Json::object();
  const auto& group = WeylGroup::get(partial.d);
  for (std::size_t idx = 0; idx < group.size(); ++idx) values[permutation_key(group[idx])] = partial.values[idx];
  return Json{{"d", partial.d}, {"r", partial.r}, {"values", values}};
}

PartialFunction partial_from_json(const Json& j) {
  PartialFunction out{require(j, "d").get<int>(), require(j, "r").get<int>(), {}};
  const auto& group = WeylGroup::get(out.d);
  const auto& values = require(j, "values");
  if (values.size() != group.size()) throw SizeMismatchError("partial: expected one value per element of W");
  out.values.assign(group.size(), 0);
  for (const auto& [key, value] : values.items()) {
    const auto w = permutation_from_key(key);
    if (w.d() != out.d) throw SizeMismatchError("partial: permutation " + key + " has the wrong size");
    out.values[group.index_of(w)] = value.get<std::int64_t>();
  }
  return out;
}

Json wtype_to_json(const WTypeModule& m) {
  const auto& group = WeylGroup::get(m.d());
  Json eps = Json::object();
  for (std::size_t idx = 0; idx < group.size(); ++idx) eps[permutation_key(group[idx])] = fq_to_json(m.eps()[idx]);
  Json gens = Json::object();
  for (const auto& g : m.standard_generators()) gens[g.name()] = fq_matrix_to_json(m.matrix(g), m.d());
  const auto& f = *m.field();
  return Json{{"d", m.d()},
              {"q", m.q()},
              {"field", {{"p", f.p()}, {"f", f.f()}, {"modulus", f.modulus()}, {"generator", fq_to_json({m.field(), f.generator()})}}},
              {"theta_exp", m.theta_exp()},
              {"sigma", sigma_to_json(m.sigma())},
              {"eps", eps},
              {"generators", gens}};
}

WTypeModule wtype_from_json(const Json& j) {
  const int q = require(j, "q").get<int>();
  auto sigma = sigma_from_json(require(j, "sigma"));
  const auto& group = WeylGroup::get(sigma.d);
  const auto len = static_cast<std::size_t>(sigma.d) + 1;
  auto theta = field_or(j, "theta_exp", std::vector<std::int64_t>(len, 0));
  const auto field = FqField::get(q);
  std::vector<FqElement> eps(group.size(), FqElement::one(field));
  if (j.contains("eps")) {
    const auto& e = j.at("eps");
    if (e.size() != group.size()) throw SizeMismatchError("eps: expected one value per element of W");
    for (const auto& [key, value] : e.items()) eps[group.index_of(permutation_from_key(key))] = fq_from_json(value, field);
  }
  return make_wtype_module(std::move(theta), std::move(sigma), std::move(eps), q);
}

Json balance_check_to_json(const BalanceCheck& check) {
  Json out{{"balanced", check.balanced}};
  if (check.witness) {
    const auto& w = *check.witness;
    const char* side = w.side == BalanceFailure::NonzeroSum ? "nonzero_sum" : (w.side == BalanceFailure::Upper ? "upper" : "lower");
    out["witness"] = {{"side", side}, {"subset", w.subset}, {"sum", w.sum}, {"bound", w.bound}};
  }
  return out;
}

Json nabla_check_to_json(const NablaCheck& check) {
  Json out{{"ok", check.ok}};
  if (check.witness) {
    const auto& w = *check.witness;
    out["witness"] = {{"condition", w.condition == NablaCondition::UbarStep ? "ubar_step" : "simple_step"},
                      {"w", permutation_key(w.w)},
                      {"s", w.s},
                      {"lhs", w.lhs},
                      {"expected", w.expected},
                      {"message", w.describe()}};
  }
  return out;
}

Json stability_to_json(const StabilityCheck& check) {
  Json out{{"stable", check.stable}};
  if (check.witness) {
    const auto& w = *check.witness;
    out["witness"] = {{"generator", w.generator.name()},
                      {"row", permutation_key(w.row)},
                      {"col", permutation_key(w.col)},
                      {"entry", w.entry}};
  }
  return out;
}

Json relation_report_to_json(const RelationReport& report) {
  Json results = Json::array();
  for (const auto& r : report.results) {
    Json item{{"relation", r.relation}, {"instances", r.instances}, {"failures", r.failures}, {"passed", r.passed()}};
    if (!r.passed()) item["first_failure"] = r.first_failure;
    results.push_back(item);
  }
  return Json{{"all_passed", report.all_passed()}, {"results", results}};
}

Json partial_check_to_json(const PartialCheck& check) {
  Json out{{"ok", check.ok}};
  if (check.witness) {
    const auto& w = *check.witness;
    out["witness"] = {{"i", w.i}, {"j", w.j}, {"w", permutation_key(w.w)}, {"message", w.describe()}};
  }
  return out;
}

Json oracle_report_to_json(const OracleReport& report) {
  Json mismatches = Json::array();
  for (const auto& m : report.mismatches)
    mismatches.push_back({{"generator", m.generator}, {"w", m.w}, {"expected", m.expected}, {"got", m.got}});
  return Json{{"d", report.d},
              {"q", report.q},
              {"matches", report.matches},
              {"mismatches", mismatches},
              {"precision", report.precision},
              {"precision_stable", report.precision_stable}};
}

}  // namespace hecke
