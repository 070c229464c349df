#include "hecke/psmod.hpp"

#include "hecke/errors.hpp"

namespace hecke {

bool theta_trivial_along(const CharacterData& c, const Permutation& w, int i) {
  return theta_slots_agree(c, w(i - 1), w(i));
}

std::int64_t kappa_exponent(const CharacterData& c, const Permutation& w, int i) {
  const auto& field = *FqField::get(c.q);
  return c.theta_exp[static_cast<std::size_t>(w(i - 1))] * field.log_minus_one();
}

ScalarMatrix operator_matrix(const CharacterData& c, const Generator& g) {
  validate_generator(g, c.d);
  const auto ring = ScalarRing::get(c.q, c.r);
  const auto& group = WeylGroup::get(c.d);
  const auto zero = Scalar::zero(ring);
  ScalarMatrix m(group.size(), group.size(), zero);
  const auto q = Scalar::from_int(ring, c.q);
  const auto q_minus_one = Scalar::from_int(ring, c.q - 1);

  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const Permutation& w = group[idx];
    switch (g.kind) {
      case Generator::Kind::S: {
        const std::size_t ws = group.times_s(idx, g.i);
        if (ascends(w, g.i)) {
          m(ws, idx) = Scalar::from_int(ring, 1);
        } else {
          m(ws, idx) = q;
          if (theta_trivial_along(c, w, g.i))
            m(idx, idx) = Scalar::monomial(ring, kappa_exponent(c, group[ws], g.i), 0) * q_minus_one;
        }
        break;
      }
      case Generator::Kind::UInv:
        m(group.times_ubar(idx, -1), idx) = theta_of_t(c, ring, w);
        break;
      case Generator::Kind::U: {
        const std::size_t wu = group.times_ubar(idx, 1);
        const auto j = static_cast<std::size_t>(t_index(group[wu]));
        m(wu, idx) = Scalar::monomial(ring, -c.unit_exp[j], -c.pi_ord[j]);
        break;
      }
      case Generator::Kind::T: {
        std::int64_t e = 0;
        for (int j = 0; j <= c.d; ++j)
          e -= c.theta_exp[static_cast<std::size_t>(w(j))] * g.digits[static_cast<std::size_t>(j)];
        m(idx, idx) = Scalar::monomial(ring, e, 0);
        break;
      }
    }
  }
  return m;
}

HeckeModule::HeckeModule(CharacterData c) : c_(std::move(c)), ring_(ScalarRing::get(c_.q, c_.r)) {}

ScalarMatrix HeckeModule::matrix(const Generator& g) const {
  auto m = operator_matrix(c_, g);
  if (!nabla_) return m;
  for (std::size_t row = 0; row < m.rows(); ++row)
    for (std::size_t col = 0; col < m.cols(); ++col) {
      if (m(row, col).is_zero()) continue;
      m(row, col) *= Scalar::monomial(ring_, 0, nabla_->at(col) - nabla_->at(row));
    }
  return m;
}

std::vector<Generator> HeckeModule::standard_generators() const {
  std::vector<Generator> out;
  for (int j = 0; j <= c_.d; ++j) out.push_back(Generator::t_basis(c_.d, j));
  out.push_back(Generator::u());
  out.push_back(Generator::u_inv());
  for (int i = 1; i <= c_.d; ++i) out.push_back(Generator::s(i));
  return out;
}

OperatorSource<Scalar> HeckeModule::operators() const {
  OperatorSource<Scalar> src{c_.d,
                             c_.q,
                             Scalar::zero(ring_),
                             Scalar::from_int(ring_, 1),
                             [this](int i) { return matrix(Generator::s(i)); },
                             matrix(Generator::u()),
                             matrix(Generator::u_inv()),
                             [this](const std::vector<std::int64_t>& e) { return matrix(Generator::t(e)); },
                             true};
  return src;
}

HeckeModule rebase_to_lattice(const HeckeModule& m, const NablaFunction& nabla) {
  if (m.nabla_) throw PreconditionError("rebase_to_lattice: module is already in a lattice basis");
  if (nabla.d != m.d()) throw SizeMismatchError("rebase_to_lattice: nabla and module disagree on d");
  HeckeModule out = m;
  out.nabla_ = nabla;
  return out;
}

StabilityCheck is_lattice_stable(const CharacterData& c, const NablaFunction& nabla) {
  const auto lattice = rebase_to_lattice(HeckeModule(c), nabla);
  const auto& group = WeylGroup::get(c.d);
  std::vector<Generator> gens;
  for (int j = 0; j <= c.d; ++j) gens.push_back(Generator::t_basis(c.d, j));
  gens.push_back(Generator::u_inv());
  gens.push_back(Generator::u());
  gens.push_back(Generator::s(c.d));
  for (const auto& g : gens) {
    const auto m = lattice.matrix(g);
    for (std::size_t col = 0; col < m.cols(); ++col)
      for (std::size_t row = 0; row < m.rows(); ++row)
        if (!is_integral(m(row, col)))
          return {false, StabilityWitness{g, group[row], group[col], m(row, col).to_string()}};
  }
  return {};
}

RelationReport check_relations(const HeckeModule& m) { return check_relation_suite(m.operators()); }

BalanceCheck unitarity_criterion(const CharacterData& c) {
  const int size = c.d + 1;
  const std::uint32_t full = (1u << size) - 1;
  std::int64_t total = 0;
  for (auto m : c.pi_ord) total += m;
  if (total != 0) return {false, BalanceWitness{BalanceFailure::NonzeroSum, mask_to_subset(full, size), total, 0}};
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::int64_t sum = 0;
    for (int j = 0; j < size; ++j)
      if (mask & (1u << j)) sum += theta_component_order(c, j);
    const std::int64_t upper = c.r * delta_mask(mask);
    if (sum > upper) return {false, BalanceWitness{BalanceFailure::Upper, mask_to_subset(mask, size), sum, upper}};
    const std::int64_t lower = -c.r * delta_mask(full & ~mask);
    if (sum < lower) return {false, BalanceWitness{BalanceFailure::Lower, mask_to_subset(mask, size), sum, lower}};
  }
  return {};
}

CharacterData dual_character(const CharacterData& c) {
  std::vector<std::int64_t> theta(c.theta_exp.size()), units(c.unit_exp.size()), orders(c.pi_ord.size());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    theta[i] = -c.theta_exp[i];
    units[i] = -c.unit_exp[i];
    const int slot = ubar(c.d, static_cast<int>(i))(0);
    orders[i] = -c.pi_ord[i] - std::int64_t{c.r} * (c.d - 2 * slot);
  }
  return make_character(std::move(theta), std::move(orders), std::move(units), c.q, c.r);
}

}  // namespace hecke
