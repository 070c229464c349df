#pragma once

#include <cstdint>
#include <vector>

#include "hecke/coxeter.hpp"
#include "hecke/scalar.hpp"
#include "hecke/weights.hpp"

namespace hecke {

/// A tamely ramified character Theta of the diagonal torus.
///
/// theta_exp[j]: exponent a_j of theta on the j-th factor of (k_F^x)^{d+1},
///   so theta(diag(g^{e_0}, ..., g^{e_d})) = zeta^{sum a_j e_j}.
/// pi_ord[i], unit_exp[i]: Theta(t_{ubar^i}) = zeta^{unit_exp[i]} pi^{pi_ord[i]}.
struct CharacterData {
  int d = 1;
  int q = 2;
  int r = 1;
  std::vector<std::int64_t> theta_exp;
  std::vector<std::int64_t> pi_ord;
  std::vector<std::int64_t> unit_exp;

  friend bool operator==(const CharacterData&, const CharacterData&) = default;
};

/// Validates lengths (SizeMismatchError), q and r (DomainError); residues
/// are reduced into [0, q-1).
CharacterData make_character(std::vector<std::int64_t> theta_exp, std::vector<std::int64_t> pi_ord,
                             std::vector<std::int64_t> unit_exp, int q, int r);

/// The trivial unramified character.
CharacterData trivial_character(int d, int q, int r);

/// t_w is diagonal with p_F at slot w(0); it equals t_{ubar^j} for the j
/// returned here, namely ubar^j(0) = w(0).
int t_index(const Permutation& w);

/// Theta(t_w) as an exact scalar.
Scalar theta_of_t(const CharacterData& c, const ScalarRingPtr& ring, const Permutation& w);

/// ord_K Theta_j(p_F) where Theta = diag(Theta_0, ..., Theta_d); equals
/// pi_ord[(d+1-j) mod (d+1)].
std::int64_t theta_component_order(const CharacterData& c, int j);

/// n_i = -pi_ord[(i+1) mod (d+1)].
Weight weight_of_character(const CharacterData& c);

/// Unramified-unit character with weight n: pi_ord[i] = -n[i-1], units 1.
CharacterData character_from_weight(std::span<const std::int64_t> n, int q, int r,
                                    std::vector<std::int64_t> theta_exp = {});

/// a_x == a_y in Z/(q-1) for slots x, y of theta_exp.
bool theta_slots_agree(const CharacterData& c, int x, int y);

}  // namespace hecke
