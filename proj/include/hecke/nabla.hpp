#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hecke/character.hpp"
#include "hecke/coxeter.hpp"
#include "hecke/weights.hpp"

namespace hecke {

/// A function W -> Z, stored by WeylGroup index (lexicographic rank).
struct NablaFunction {
  int d = 1;
  std::vector<std::int64_t> values;

  std::int64_t operator()(const Permutation& w) const { return values[lex_rank(w)]; }
  std::int64_t at(std::size_t idx) const { return values[idx]; }
  friend bool operator==(const NablaFunction&, const NablaFunction&) = default;
};

NablaFunction zero_nabla(int d);

/// Inductive construction: for w = w' ubar^j with w'(d) = d,
/// nabla(w) = nabla'(w') + sum_{t<j} n_{mu(w' ubar^t)}, where nabla' is built
/// from reduce_weight(n). Normalized so nabla(e) = 0.
/// Throws PreconditionError on unbalanced input.
NablaFunction build_nabla(std::span<const std::int64_t> n, int r);

enum class NablaCondition {
  UbarStep,   // nabla(w) - nabla(w ubar) against the prescribed increment
  SimpleStep  // nabla(w) - r <= nabla(w s) <= nabla(w) for l(ws) > l(w)
};

struct NablaWitness {
  NablaCondition condition;
  Permutation w;
  int s = 0;  // index i of s_i for SimpleStep
  std::int64_t lhs = 0;
  std::int64_t expected = 0;
  std::string describe() const;
};

struct NablaCheck {
  bool ok = true;
  std::optional<NablaWitness> witness;
  explicit operator bool() const { return ok; }
};

/// nabla(w) - nabla(w ubar) = -n_{mu(w)} for all w, and the simple-step
/// bounds for every s_i and every w with l(w s_i) > l(w).
NablaCheck check_integration(const NablaFunction& nabla, std::span<const std::int64_t> n, int r);

enum class EquinabMode { Full, SdOnly };

/// nabla(w) - nabla(w ubar) = ord_K Theta(t_{w ubar}) for all w, plus the
/// simple-step bounds for all s_i (Full) or for s_d only (SdOnly).
NablaCheck check_equinab(const NablaFunction& nabla, const CharacterData& c, EquinabMode mode);

/// sigma on W^{s_d}, indexed like NablaFunction; nullopt off W^{s_d}.
struct SigmaFunction {
  int d = 1;
  std::vector<std::optional<int>> values;

  /// sigma(w) = i in the shorthand sense: w in W^{s_d} and sigma(w) = i.
  bool is(std::size_t idx, int i) const { return values[idx] && *values[idx] == i; }
  friend bool operator==(const SigmaFunction&, const SigmaFunction&) = default;
};

/// 1 if nabla(w s_d) = nabla(w), -1 if it is nabla(w) - r, 0 strictly between.
/// Throws PreconditionError naming w when nabla(w s_d) leaves [nabla(w) - r, nabla(w)].
SigmaFunction sigma_from_nabla(const NablaFunction& nabla, int r);

/// Every sigma: W^{s_d} -> {-1, 0, 1}, in odometer order (first ascent varies fastest).
std::vector<SigmaFunction> enumerate_sigma(int d);

/// A function W -> [-r, r] indexed like NablaFunction.
struct PartialFunction {
  int d = 1;
  int r = 1;
  std::vector<std::int64_t> values;

  std::int64_t operator()(const Permutation& w) const { return values[lex_rank(w)]; }
  friend bool operator==(const PartialFunction&, const PartialFunction&) = default;
};

/// partial(w) = nabla(w) - nabla(w s_d) on W^{s_d}, extended by partial(w s_d) = -partial(w).
PartialFunction partial_from_nabla(const NablaFunction& nabla, int r);

}  // namespace hecke
