#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/character.hpp"
#include "hecke/generator.hpp"
#include "hecke/matrix.hpp"
#include "hecke/nabla.hpp"
#include "hecke/relations.hpp"
#include "hecke/scalar.hpp"
#include "hecke/weights.hpp"

namespace hecke {

using ScalarMatrix = Matrix<Scalar>;

/// Matrix of a generator on V^{I_0} in the basis {f_w}, rows and columns
/// indexed by WeylGroup positions. Column w holds the image of f_w:
///   T_{s_i} f_w = f_{ws}                          if l(ws) > l(w)
///               = q f_{ws}                        if l(ws) < l(w), theta regular along s
///               = q f_{ws} + kappa_{ws,s}(q-1) f_w otherwise
///   T_{u^{-1}} f_w = Theta(t_w) f_{w ubar^{-1}}
///   T_u f_w        = Theta(t_{w ubar})^{-1} f_{w ubar}
///   T_t f_w        = theta(w t^{-1} w^{-1}) f_w
ScalarMatrix operator_matrix(const CharacterData& c, const Generator& g);

/// theta(w h_{s_i}(.) w^{-1}) is trivial, i.e. a_{w(i-1)} = a_{w(i)} mod (q-1).
bool theta_trivial_along(const CharacterData& c, const Permutation& w, int i);

/// kappa_{w,s_i} = theta(w delta_{s_i} w^{-1}) = zeta^{a_{w(i-1)} log(-1)} as an exponent of zeta.
std::int64_t kappa_exponent(const CharacterData& c, const Permutation& w, int i);

/// V^{I_0} with its Hecke action, either in the basis {f_w} or, after
/// rebase_to_lattice, in the basis g_w = pi^{nabla(w)} f_w of L_nabla.
class HeckeModule {
 public:
  explicit HeckeModule(CharacterData c);

  int d() const { return c_.d; }
  const CharacterData& character() const { return c_; }
  const ScalarRingPtr& ring() const { return ring_; }
  const std::optional<NablaFunction>& nabla() const { return nabla_; }

  ScalarMatrix matrix(const Generator& g) const;
  /// T_t for the torus basis, T_u, T_{u^{-1}}, T_{s_1}, ..., T_{s_d}.
  std::vector<Generator> standard_generators() const;
  OperatorSource<Scalar> operators() const;

  friend HeckeModule rebase_to_lattice(const HeckeModule& m, const NablaFunction& nabla);

 private:
  CharacterData c_;
  ScalarRingPtr ring_;
  std::optional<NablaFunction> nabla_;
};

/// Conjugation by diag(pi^{nabla(w)}): entry (v, w) is multiplied by
/// pi^{nabla(w) - nabla(v)}. Throws PreconditionError if m is already rebased.
HeckeModule rebase_to_lattice(const HeckeModule& m, const NablaFunction& nabla);

struct StabilityWitness {
  Generator generator;
  Permutation row;
  Permutation col;
  std::string entry;
};

struct StabilityCheck {
  bool stable = true;
  std::optional<StabilityWitness> witness;
  explicit operator bool() const { return stable; }
};

/// Every entry of the rebased matrices of the torus basis, T_{u^{-1}}, T_u
/// and T_{s_d} is integral.
StabilityCheck is_lattice_stable(const CharacterData& c, const NablaFunction& nabla);

RelationReport check_relations(const HeckeModule& m);

/// Sum of pi-orders is zero, and for all I:
///   r Delta(I) >= sum_{j in I} ord Theta_j(p_F) >= -r Delta(complement of I).
/// The witness reuses the balanced-weight witness shape with sums of ord Theta_j(p_F).
BalanceCheck unitarity_criterion(const CharacterData& c);

/// Data of Theta^{-1} delta: exponents negated, and
/// pi_ord'[i] = -pi_ord[i] - r (d - 2 ubar^i(0)).
CharacterData dual_character(const CharacterData& c);

}  // namespace hecke
