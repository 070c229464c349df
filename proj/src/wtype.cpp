#include "hecke/wtype.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"
#include "hecke/psmod.hpp"

namespace hecke {

WTypeModule::WTypeModule(int q, std::vector<std::int64_t> theta_exp, SigmaFunction sigma, std::vector<FqElement> eps)
    : field_(FqField::get(q)), theta_exp_(std::move(theta_exp)), sigma_(std::move(sigma)), eps_(std::move(eps)) {}

FqElement WTypeModule::kappa(std::size_t w_idx) const {
  const auto& w = WeylGroup::get(d())[w_idx];
  return FqElement::generator_power(field_, theta_exp_[static_cast<std::size_t>(w(d()))] * field_->log_minus_one());
}

FqMatrix WTypeModule::matrix(const Generator& g) const {
  validate_generator(g, d());
  const int dd = d();
  if (g.kind == Generator::Kind::S && g.i < dd) {
    const auto src = operators();
    return conjugated_s(src, src.s(dd), g.i);
  }
  const auto& group = WeylGroup::get(dd);
  const auto zero = FqElement::zero(field_);
  const auto one = FqElement::one(field_);
  FqMatrix m(group.size(), group.size(), zero);
  const std::int64_t n = q() - 1;
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const Permutation& w = group[idx];
    switch (g.kind) {
      case Generator::Kind::T: {
        std::int64_t e = 0;
        for (int j = 0; j <= dd; ++j)
          e -= theta_exp_[static_cast<std::size_t>(w(j))] * g.digits[static_cast<std::size_t>(j)];
        m(idx, idx) = FqElement::generator_power(field_, e);
        break;
      }
      case Generator::Kind::UInv:
        m(group.times_ubar(idx, -1), idx) = eps_[idx];
        break;
      case Generator::Kind::U: {
        const std::size_t wu = group.times_ubar(idx, 1);
        m(wu, idx) = eps_[wu].inverse();
        break;
      }
      case Generator::Kind::S: {
        const std::size_t ws = group.times_s(idx, dd);
        const std::int64_t diff = theta_exp_[static_cast<std::size_t>(w(dd - 1))] -
                                  theta_exp_[static_cast<std::size_t>(w(dd))];
        const bool trivial = ((diff % n) + n) % n == 0;
        const auto minus_kappa = -kappa(idx);
        if ((sigma_.is(ws, -1) && !trivial) || sigma_.is(idx, 1)) {
          m(ws, idx) = one;
        } else if ((sigma_.is(ws, 0) || sigma_.is(ws, 1)) && trivial) {
          m(idx, idx) = minus_kappa;
        } else if (sigma_.is(ws, -1) && trivial) {
          m(ws, idx) = one;
          m(idx, idx) = minus_kappa;
        }
        break;
      }
    }
  }
  return m;
}

std::vector<Generator> WTypeModule::standard_generators() const {
  std::vector<Generator> out;
  for (int j = 0; j <= d(); ++j) out.push_back(Generator::t_basis(d(), j));
  out.push_back(Generator::u());
  out.push_back(Generator::u_inv());
  out.push_back(Generator::s(d()));
  return out;
}

OperatorSource<FqElement> WTypeModule::operators() const {
  OperatorSource<FqElement> src{d(),
                                q(),
                                FqElement::zero(field_),
                                FqElement::one(field_),
                                {},
                                matrix(Generator::u()),
                                matrix(Generator::u_inv()),
                                [this](const std::vector<std::int64_t>& e) { return matrix(Generator::t(e)); },
                                false};
  const auto sd = matrix(Generator::s(d()));
  src.s = [base = src, sd](int i) { return i == base.d ? sd : conjugated_s(base, sd, i); };
  return src;
}

WTypeModule make_wtype_module(std::vector<std::int64_t> theta_exp, SigmaFunction sigma, std::vector<FqElement> eps,
                              int q) {
  const int d = sigma.d;
  const auto& group = WeylGroup::get(d);
  if (theta_exp.size() != static_cast<std::size_t>(d) + 1) throw SizeMismatchError("theta_exp must have length d+1");
  if (sigma.values.size() != group.size()) throw SizeMismatchError("sigma table has the wrong size");
  if (eps.size() != group.size()) throw SizeMismatchError("eps needs one unit per element of W");
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const bool in_domain = ascends(group[idx], d);
    if (sigma.values[idx].has_value() != in_domain)
      throw DomainError("sigma must be defined exactly on W^{s_d}; offending w = [" + group[idx].to_string() + "]");
    if (in_domain && (*sigma.values[idx] < -1 || *sigma.values[idx] > 1))
      throw DomainError("sigma values lie in {-1, 0, 1}");
    if (eps[idx].field().q() != q) throw ParameterMismatchError("eps lives in the wrong field");
    if (eps[idx].is_zero()) throw DomainError("eps_w must be nonzero at w = [" + group[idx].to_string() + "]");
  }
  for (auto& a : theta_exp) a = ((a % (q - 1)) + (q - 1)) % (q - 1);
  return WTypeModule(q, std::move(theta_exp), std::move(sigma), std::move(eps));
}

std::vector<FqElement> epsilon_from_character(const CharacterData& c) {
  const auto field = FqField::get(c.q);
  const auto& group = WeylGroup::get(c.d);
  std::vector<FqElement> eps;
  eps.reserve(group.size());
  for (const auto& w : group.elements())
    eps.push_back(FqElement::generator_power(field, c.unit_exp[static_cast<std::size_t>(t_index(w))]));
  return eps;
}

namespace {

WTypeModule direct_module(const CharacterData& c, const NablaFunction& nabla) {
  return make_wtype_module(c.theta_exp, sigma_from_nabla(nabla, c.r), epsilon_from_character(c), c.q);
}

}  // namespace

ReductionComparison compare_reduction(const CharacterData& c, const NablaFunction& nabla) {
  const auto lattice = rebase_to_lattice(HeckeModule(c), nabla);
  const auto direct = direct_module(c, nabla);
  const auto& group = WeylGroup::get(c.d);
  auto gens = direct.standard_generators();
  for (const auto& e : torus_probes(c.d, c.q)) gens.push_back(Generator::t(e));
  for (const auto& g : gens) {
    const auto lifted = lattice.matrix(g);
    const auto expected = direct.matrix(g);
    for (std::size_t row = 0; row < lifted.rows(); ++row)
      for (std::size_t col = 0; col < lifted.cols(); ++col) {
        const auto reduced = reduce_mod_pi(lifted(row, col));
        if (!(reduced == expected(row, col))) {
          std::ostringstream out;
          out << g.name() << " at (" << group[row].to_string() << " | " << group[col].to_string()
              << "): reduction " << reduced.to_string() << " vs formula " << expected(row, col).to_string();
          return {false, out.str()};
        }
      }
  }
  return {};
}

WTypeModule reduce_lattice(const CharacterData& c, const NablaFunction& nabla) {
  const auto stable = is_lattice_stable(c, nabla);
  if (!stable) {
    const auto& w = *stable.witness;
    throw PreconditionError("reduce_lattice: L_nabla is not stable; " + w.generator.name() + " has entry " + w.entry +
                            " at (" + w.row.to_string() + " | " + w.col.to_string() + ")");
  }
  const auto cmp = compare_reduction(c, nabla);
  if (!cmp.agree) throw InternalInvariantError("reduce_lattice: reduction and direct formulas differ: " + cmp.first_mismatch);
  return direct_module(c, nabla);
}

RelationReport validate_action(const WTypeModule& m) { return check_relation_suite(m.operators()); }

std::int64_t partial_word_sum(const PartialFunction& partial, const Permutation& w, std::span<const int> word) {
  const auto& group = WeylGroup::get(partial.d);
  std::size_t cur = group.index_of(w);
  std::int64_t sum = 0;
  for (int letter : word) {
    sum += partial.values[group.times_ubar(cur, partial.d - letter)];
    cur = group.times_s(cur, letter);
  }
  return sum;
}

std::string PartialWitness::describe() const {
  static const char* names[] = {"range", "antisymmetry", "sigma compatibility", "commutation identity",
                                "braid identity"};
  std::ostringstream out;
  out << names[static_cast<int>(condition)] << " fails at w = [" << w.to_string() << "]";
  if (condition == PartialCondition::Commutation) out << ", i = " << i << ", j = " << j;
  if (condition == PartialCondition::Braid) out << ", i = " << i;
  return out.str();
}

PartialCheck check_partial(const PartialFunction& partial, const SigmaFunction& sigma) {
  const int d = partial.d;
  const int r = partial.r;
  const auto& group = WeylGroup::get(d);
  if (partial.values.size() != group.size() || sigma.d != d) throw SizeMismatchError("partial and sigma disagree on d");
  auto fail = [](PartialCondition cond, const Permutation& w, int i = 0, int j = 0) {
    return PartialCheck{false, PartialWitness{cond, i, j, w}};
  };
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const auto v = partial.values[idx];
    if (v < -r || v > r) return fail(PartialCondition::Range, group[idx]);
    if (v != -partial.values[group.times_s(idx, d)]) return fail(PartialCondition::Antisymmetry, group[idx]);
  }
  for (std::size_t idx : group.sd_ascent_set()) {
    const auto v = partial.values[idx];
    const bool ok = (sigma.is(idx, 1) && v == 0) || (sigma.is(idx, 0) && v > 0 && v < r) ||
                    (sigma.is(idx, -1) && v == r);
    if (!ok) return fail(PartialCondition::Sigma, group[idx]);
  }
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const auto& w = group[idx];
    for (int i = 1; i < d; ++i)
      for (int j = i + 2; j <= d; ++j) {
        const int word_a[] = {i, j};
        const int word_b[] = {j, i};
        if (partial_word_sum(partial, w, word_a) != partial_word_sum(partial, w, word_b))
          return fail(PartialCondition::Commutation, w, i, j);
      }
    for (int i = 1; i < d; ++i) {
      const int word_a[] = {i, i + 1, i};
      const int word_b[] = {i + 1, i, i + 1};
      if (partial_word_sum(partial, w, word_a) != partial_word_sum(partial, w, word_b))
        return fail(PartialCondition::Braid, w, i);
    }
  }
  return {};
}

Realization silvester_realize(const std::vector<std::int64_t>& theta_exp, const SigmaFunction& sigma,
                              const std::vector<FqElement>& eps, const PartialFunction& partial, int q) {
  const int d = sigma.d;
  const auto& group = WeylGroup::get(d);
  const auto target = make_wtype_module(theta_exp, sigma, eps, q);
  for (std::size_t idx = 0; idx < group.size(); ++idx)
    for (int i = 2; i <= d; ++i)
      if (!(eps[idx] == eps[group.times_s(idx, i)]))
        throw PreconditionError("silvester_realize: eps_w != eps_{w s_" + std::to_string(i) + "} at w = [" +
                                group[idx].to_string() + "]");
  const auto check = check_partial(partial, sigma);
  if (!check) throw PreconditionError("silvester_realize: " + check.witness->describe());

  NablaFunction nabla{d, std::vector<std::int64_t>(group.size(), 0)};
  const auto e = Permutation::identity(d);
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const auto word = reduced_word(group[idx]);
    nabla.values[idx] = -partial_word_sum(partial, e, word);
    for (const auto& other : {reduced_word_largest(group[idx])})
      if (partial_word_sum(partial, e, other) != -nabla.values[idx])
        throw InternalInvariantError("silvester_realize: word sum depends on the reduced word at v = [" +
                                     group[idx].to_string() + "]");
  }
  // nabla(w) - nabla(w v) = partial(w, v) for all w, v
  for (std::size_t w = 0; w < group.size(); ++w)
    for (std::size_t v = 0; v < group.size(); ++v) {
      const std::size_t wv = group.index_of(group[w] * group[v]);
      if (nabla.at(w) - nabla.at(wv) != partial_word_sum(partial, group[w], reduced_word(group[v])))
        throw InternalInvariantError("silvester_realize: cocycle identity fails at w = [" + group[w].to_string() +
                                     "], v = [" + group[v].to_string() + "]");
    }

  std::vector<std::int64_t> pi_ord(static_cast<std::size_t>(d) + 1), unit_exp(pi_ord.size());
  for (int j = 0; j <= d; ++j) {
    const std::size_t idx = group.index_of(ubar(d, j));
    pi_ord[static_cast<std::size_t>(j)] = nabla.at(group.times_ubar(idx, -1)) - nabla.at(idx);
    unit_exp[static_cast<std::size_t>(j)] = eps[idx].log();
  }
  auto character = make_character(theta_exp, pi_ord, unit_exp, q, partial.r);
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const auto j = static_cast<std::size_t>(t_index(group[idx]));
    if (nabla.at(group.times_ubar(idx, -1)) - nabla.at(idx) != pi_ord[j] ||
        !(eps[idx] == FqElement::generator_power(target.field(), unit_exp[j])))
      throw InternalInvariantError("silvester_realize: Theta(t_w) is not well defined at w = [" +
                                   group[idx].to_string() + "]");
  }

  Realization out{character, nabla, false};
  if (is_lattice_stable(character, nabla) && compare_reduction(character, nabla).agree)
    out.round_trip = direct_module(character, nabla) == target;
  return out;
}

std::optional<PartialFunction> search_partial(const SigmaFunction& sigma, int r) {
  const int d = sigma.d;
  const auto& group = WeylGroup::get(d);
  const auto& reps = group.sd_ascent_set();
  PartialFunction out{d, r, std::vector<std::int64_t>(group.size(), 0)};

  std::vector<std::vector<std::int64_t>> domains;
  for (std::size_t idx : reps) {
    if (!sigma.values[idx]) throw DomainError("search_partial: sigma is not total on W^{s_d}");
    std::vector<std::int64_t> dom;
    switch (*sigma.values[idx]) {
      case 1:
        dom = {0};
        break;
      case -1:
        dom = {r};
        break;
      default:
        for (std::int64_t v = 1; v < r; ++v) dom.push_back(v);
    }
    if (dom.empty()) return std::nullopt;
    domains.push_back(std::move(dom));
  }

  auto assign = [&](std::size_t k, std::int64_t v) {
    out.values[reps[k]] = v;
    out.values[group.times_s(reps[k], d)] = -v;
  };

  if (d <= 2) {
    for (std::size_t k = 0; k < reps.size(); ++k) assign(k, domains[k].front());
    if (!check_partial(out, sigma)) return std::nullopt;
    return out;
  }

  // position of each element of W among the variables (via its W^{s_d} representative)
  std::vector<std::size_t> var_of(group.size());
  for (std::size_t k = 0; k < reps.size(); ++k) {
    var_of[reps[k]] = k;
    var_of[group.times_s(reps[k], d)] = k;
  }
  struct Identity {
    std::vector<std::size_t> lhs, rhs;
  };
  std::vector<std::vector<Identity>> by_last_var(reps.size());
  auto add_identity = [&](std::size_t w, std::span<const int> a, std::span<const int> b) {
    Identity id;
    std::size_t last = 0;
    auto collect = [&](std::span<const int> word, std::vector<std::size_t>& into) {
      std::size_t cur = w;
      for (int letter : word) {
        const std::size_t x = group.times_ubar(cur, d - letter);
        into.push_back(x);
        last = std::max(last, var_of[x]);
        cur = group.times_s(cur, letter);
      }
    };
    collect(a, id.lhs);
    collect(b, id.rhs);
    by_last_var[last].push_back(std::move(id));
  };
  for (std::size_t w = 0; w < group.size(); ++w) {
    for (int i = 1; i < d; ++i)
      for (int j = i + 2; j <= d; ++j) {
        const int a[] = {i, j};
        const int b[] = {j, i};
        add_identity(w, a, b);
      }
    for (int i = 1; i < d; ++i) {
      const int a[] = {i, i + 1, i};
      const int b[] = {i + 1, i, i + 1};
      add_identity(w, a, b);
    }
  }
  auto holds = [&](const Identity& id) {
    std::int64_t s = 0;
    for (auto x : id.lhs) s += out.values[x];
    for (auto x : id.rhs) s -= out.values[x];
    return s == 0;
  };
  auto rec = [&](auto&& self, std::size_t k) -> bool {
    if (k == reps.size()) return true;
    for (auto v : domains[k]) {
      assign(k, v);
      if (std::all_of(by_last_var[k].begin(), by_last_var[k].end(), holds) && self(self, k + 1)) return true;
    }
    return false;
  };
  if (!rec(rec, 0)) return std::nullopt;
  return out;
}

}  // namespace hecke
