#include "hecke/nabla.hpp"

#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

NablaFunction zero_nabla(int d) {
  return {d, std::vector<std::int64_t>(WeylGroup::get(d).size(), 0)};
}

NablaFunction build_nabla(std::span<const std::int64_t> n, int r) {
  if (!is_balanced(n, r)) throw PreconditionError("build_nabla: weight is not balanced");
  const int d = static_cast<int>(n.size()) - 1;
  const auto& group = WeylGroup::get(d);
  NablaFunction out{d, std::vector<std::int64_t>(group.size(), 0)};

  if (d == 1) {
    out.values[group.index_of(Permutation::simple(1, 1))] = n[0];
    return out;
  }

  const Weight m = reduce_weight(n, r);
  const NablaFunction inner = build_nabla(m, r);
  const auto& inner_group = WeylGroup::get(d - 1);

  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const Permutation& w = group[idx];
    const int j = (w.inverse()(d) + 1) % (d + 1);
    const Permutation w_prime = w * ubar(d, -j);
    std::vector<int> restricted(w_prime.images().begin(), w_prime.images().end() - 1);
    std::int64_t value = inner.at(inner_group.index_of(Permutation(std::move(restricted))));
    for (int t = 0; t < j; ++t) value += n[static_cast<std::size_t>(mu(w_prime * ubar(d, t)))];
    out.values[idx] = value;
  }
  return out;
}

std::string NablaWitness::describe() const {
  std::ostringstream out;
  if (condition == NablaCondition::UbarStep) {
    out << "nabla(w) - nabla(w ubar) = " << lhs << ", expected " << expected << " at w = [" << w.to_string() << "]";
  } else {
    out << "nabla(w s_" << s << ") - nabla(w) = " << lhs << " outside [" << expected << ", 0] at w = ["
        << w.to_string() << "]";
  }
  return out.str();
}

namespace {

template <class Increment>
NablaCheck check_conditions(const NablaFunction& nabla, int r, int s_from, Increment increment) {
  const auto& group = WeylGroup::get(nabla.d);
  if (nabla.values.size() != group.size()) throw SizeMismatchError("nabla table has the wrong size");
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    const std::int64_t lhs = nabla.at(idx) - nabla.at(group.times_ubar(idx, 1));
    const std::int64_t expected = increment(group[idx]);
    if (lhs != expected) return {false, NablaWitness{NablaCondition::UbarStep, group[idx], 0, lhs, expected}};
  }
  for (std::size_t idx = 0; idx < group.size(); ++idx) {
    for (int i = s_from; i <= nabla.d; ++i) {
      if (!ascends(group[idx], i)) continue;
      const std::int64_t diff = nabla.at(group.times_s(idx, i)) - nabla.at(idx);
      if (diff < -r || diff > 0) return {false, NablaWitness{NablaCondition::SimpleStep, group[idx], i, diff, -r}};
    }
  }
  return {};
}

}  // namespace

NablaCheck check_integration(const NablaFunction& nabla, std::span<const std::int64_t> n, int r) {
  if (n.size() != static_cast<std::size_t>(nabla.d) + 1) throw SizeMismatchError("weight and nabla disagree on d");
  return check_conditions(nabla, r, 1, [&](const Permutation& w) { return -n[static_cast<std::size_t>(mu(w))]; });
}

NablaCheck check_equinab(const NablaFunction& nabla, const CharacterData& c, EquinabMode mode) {
  if (c.d != nabla.d) throw SizeMismatchError("character and nabla disagree on d");
  const int from = mode == EquinabMode::Full ? 1 : c.d;
  const Permutation u = ubar(c.d, 1);
  return check_conditions(nabla, c.r, from, [&](const Permutation& w) {
    return c.pi_ord[static_cast<std::size_t>(t_index(w * u))];
  });
}

SigmaFunction sigma_from_nabla(const NablaFunction& nabla, int r) {
  const auto& group = WeylGroup::get(nabla.d);
  SigmaFunction sigma{nabla.d, std::vector<std::optional<int>>(group.size())};
  for (std::size_t idx : group.sd_ascent_set()) {
    const std::int64_t here = nabla.at(idx);
    const std::int64_t there = nabla.at(group.times_s(idx, nabla.d));
    if (there == here) {
      sigma.values[idx] = 1;
    } else if (there == here - r) {
      sigma.values[idx] = -1;
    } else if (there < here && there > here - r) {
      sigma.values[idx] = 0;
    } else {
      throw PreconditionError("sigma_from_nabla: nabla(w s_d) - nabla(w) = " + std::to_string(there - here) +
                              " is outside [-r, 0] at w = [" + group[idx].to_string() + "]");
    }
  }
  return sigma;
}

std::vector<SigmaFunction> enumerate_sigma(int d) {
  const auto& group = WeylGroup::get(d);
  const auto& dom = group.sd_ascent_set();
  std::vector<SigmaFunction> out;
  std::vector<int> digits(dom.size(), 0);
  while (true) {
    SigmaFunction s{d, std::vector<std::optional<int>>(group.size())};
    for (std::size_t k = 0; k < dom.size(); ++k) s.values[dom[k]] = digits[k] - 1;
    out.push_back(std::move(s));
    std::size_t k = 0;
    while (k < digits.size() && digits[k] == 2) digits[k++] = 0;
    if (k == digits.size()) break;
    ++digits[k];
  }
  return out;
}

PartialFunction partial_from_nabla(const NablaFunction& nabla, int r) {
  const auto& group = WeylGroup::get(nabla.d);
  PartialFunction out{nabla.d, r, std::vector<std::int64_t>(group.size(), 0)};
  for (std::size_t idx : group.sd_ascent_set()) {
    const std::size_t other = group.times_s(idx, nabla.d);
    const std::int64_t v = nabla.at(idx) - nabla.at(other);
    out.values[idx] = v;
    out.values[other] = -v;
  }
  return out;
}

}  // namespace hecke
