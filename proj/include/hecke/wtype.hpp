#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hecke/character.hpp"
#include "hecke/fq.hpp"
#include "hecke/generator.hpp"
#include "hecke/matrix.hpp"
#include "hecke/nabla.hpp"
#include "hecke/relations.hpp"

namespace hecke {

using FqMatrix = Matrix<FqElement>;

/// M(theta, sigma, eps) over k = F_q with basis g_w, w in W (WeylGroup order).
class WTypeModule {
 public:
  WTypeModule(int q, std::vector<std::int64_t> theta_exp, SigmaFunction sigma, std::vector<FqElement> eps);

  int d() const { return sigma_.d; }
  int q() const { return field_->q(); }
  const FqFieldPtr& field() const { return field_; }
  const std::vector<std::int64_t>& theta_exp() const { return theta_exp_; }
  const SigmaFunction& sigma() const { return sigma_; }
  const std::vector<FqElement>& eps() const { return eps_; }

  /// kappa_w = theta(w s_d delta_{s_d} s_d w^{-1}) = (-1)^{a_{w(d)}}.
  FqElement kappa(std::size_t w_idx) const;

  /// T_t, T_u, T_{u^{-1}} and T_{s_d} from the defining case formulas.
  /// For T_{s_i} with i < d the conjugate T_{u^{-1}}^{d-i} T_{s_d} T_u^{d-i} is returned.
  FqMatrix matrix(const Generator& g) const;
  /// Torus basis, T_u, T_{u^{-1}}, T_{s_d}.
  std::vector<Generator> standard_generators() const;
  OperatorSource<FqElement> operators() const;

  friend bool operator==(const WTypeModule& a, const WTypeModule& b) {
    return a.q() == b.q() && a.theta_exp_ == b.theta_exp_ && a.sigma_ == b.sigma_ && a.eps_ == b.eps_;
  }

 private:
  FqFieldPtr field_;
  std::vector<std::int64_t> theta_exp_;
  SigmaFunction sigma_;
  std::vector<FqElement> eps_;
};

/// Validates sizes (SizeMismatchError), that sigma is defined exactly on
/// W^{s_d} with values in {-1, 0, 1} and that eps is nonzero over F_q (DomainError).
WTypeModule make_wtype_module(std::vector<std::int64_t> theta_exp, SigmaFunction sigma, std::vector<FqElement> eps,
                              int q);

/// eps_w = reduction of the unit part of Theta(t_w).
std::vector<FqElement> epsilon_from_character(const CharacterData& c);

struct ReductionComparison {
  bool agree = true;
  std::string first_mismatch;
};

/// Entrywise reduction mod pi of the rebased matrices, for the standard
/// generators and the torus probes, against the direct construction with
/// sigma_from_nabla and epsilon_from_character.
ReductionComparison compare_reduction(const CharacterData& c, const NablaFunction& nabla);

/// L_nabla tensor k. Throws PreconditionError if L_nabla is not stable and
/// InternalInvariantError if the two computations of compare_reduction differ.
WTypeModule reduce_lattice(const CharacterData& c, const NablaFunction& nabla);

/// Relations R3, R5-R8 of check_relation_suite, and R1, R2 among T_{s_d}
/// and its conjugates. Passing is necessary for an action, not sufficient.
RelationReport validate_action(const WTypeModule& m);

/// sum_m partial(w s_{i_1} ... s_{i_{m-1}} ubar^{d - i_m}) for the word i_1 ... i_k.
std::int64_t partial_word_sum(const PartialFunction& partial, const Permutation& w, std::span<const int> word);

enum class PartialCondition { Range, Antisymmetry, Sigma, Commutation, Braid };

struct PartialWitness {
  PartialCondition condition;
  int i = 0;
  int j = 0;
  Permutation w;
  std::string describe() const;
};

struct PartialCheck {
  bool ok = true;
  std::optional<PartialWitness> witness;
  explicit operator bool() const { return ok; }
};

/// Range [-r, r], partial(w s_d) = -partial(w), sigma compatibility on
/// W^{s_d}, and both cocycle identities (commutation for 1 <= i < j-1 < d,
/// braid for 1 <= i < d).
PartialCheck check_partial(const PartialFunction& partial, const SigmaFunction& sigma);

struct Realization {
  CharacterData character;
  NablaFunction nabla;
  /// reduce_lattice(character, nabla) equals the prescribed W-type module.
  bool round_trip = false;
};

/// nabla(w) = -partial(e, w) and Theta(t_w) = pi^{nabla(w ubar^{-1}) - nabla(w)} eps_w.
/// Throws PreconditionError if eps_w != eps_{w s_i} for some 2 <= i <= d or
/// check_partial fails (the message carries the witness).
Realization silvester_realize(const std::vector<std::int64_t>& theta_exp, const SigmaFunction& sigma,
                              const std::vector<FqElement>& eps, const PartialFunction& partial, int q);

/// A partial function compatible with sigma. For d <= 2 the values 0, 1, r
/// for sigma = 1, 0, -1; for larger d a backtracking search over the same
/// ranges, smallest value first. nullopt if none exists.
std::optional<PartialFunction> search_partial(const SigmaFunction& sigma, int r);

}  // namespace hecke
