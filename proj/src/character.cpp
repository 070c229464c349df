#include "hecke/character.hpp"

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t n) { return ((a % n) + n) % n; }

}  // namespace

CharacterData make_character(std::vector<std::int64_t> theta_exp, std::vector<std::int64_t> pi_ord,
                             std::vector<std::int64_t> unit_exp, int q, int r) {
  if (pi_ord.size() < 2) throw DomainError("character needs d+1 >= 2 entries");
  if (theta_exp.size() != pi_ord.size() || unit_exp.size() != pi_ord.size())
    throw SizeMismatchError("theta_exp, pi_ord and unit_exp must all have length d+1");
  if (prime_power(q).first == 0) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  if (r < 1) throw DomainError("amplitude r must be positive");
  CharacterData c;
  c.d = static_cast<int>(pi_ord.size()) - 1;
  c.q = q;
  c.r = r;
  for (auto& a : theta_exp) a = mod(a, q - 1);
  for (auto& u : unit_exp) u = mod(u, q - 1);
  c.theta_exp = std::move(theta_exp);
  c.pi_ord = std::move(pi_ord);
  c.unit_exp = std::move(unit_exp);
  return c;
}

CharacterData trivial_character(int d, int q, int r) {
  const auto n = static_cast<std::size_t>(d) + 1;
  return make_character(std::vector<std::int64_t>(n, 0), std::vector<std::int64_t>(n, 0),
                        std::vector<std::int64_t>(n, 0), q, r);
}

int t_index(const Permutation& w) {
  const int d = w.d();
  return (d + 1 - w(0)) % (d + 1);
}

Scalar theta_of_t(const CharacterData& c, const ScalarRingPtr& ring, const Permutation& w) {
  if (w.d() != c.d) throw SizeMismatchError("theta_of_t: permutation and character disagree on d");
  const auto j = static_cast<std::size_t>(t_index(w));
  return Scalar::monomial(ring, c.unit_exp[j], c.pi_ord[j]);
}

std::int64_t theta_component_order(const CharacterData& c, int j) {
  return c.pi_ord[static_cast<std::size_t>((c.d + 1 - j) % (c.d + 1))];
}

Weight weight_of_character(const CharacterData& c) {
  Weight n(c.pi_ord.size());
  const std::size_t len = n.size();
  for (std::size_t i = 0; i < len; ++i) n[i] = -c.pi_ord[(i + 1) % len];
  return n;
}

CharacterData character_from_weight(std::span<const std::int64_t> n, int q, int r,
                                    std::vector<std::int64_t> theta_exp) {
  const std::size_t len = n.size();
  if (theta_exp.empty()) theta_exp.assign(len, 0);
  std::vector<std::int64_t> m(len);
  for (std::size_t i = 0; i < len; ++i) m[i] = -n[(i + len - 1) % len];
  return make_character(std::move(theta_exp), std::move(m), std::vector<std::int64_t>(len, 0), q, r);
}

bool theta_slots_agree(const CharacterData& c, int x, int y) {
  return mod(c.theta_exp[static_cast<std::size_t>(x)] - c.theta_exp[static_cast<std::size_t>(y)], c.q - 1) == 0;
}

}  // namespace hecke
