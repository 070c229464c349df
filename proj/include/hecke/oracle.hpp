#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hecke/character.hpp"
#include "hecke/coxeter.hpp"
#include "hecke/generator.hpp"
#include "hecke/laurent.hpp"
#include "hecke/matrix.hpp"
#include "hecke/scalar.hpp"

namespace hecke {

/// An element of GL_{d+1}(F) for F = F_q((X)).
using GroupElement = Matrix<Laurent>;

constexpr std::int64_t kDefaultPrecision = 8;

GroupElement group_identity(const FqFieldPtr& field, int d);
/// M_w e_j = e_{w(j)}.
GroupElement permutation_matrix(const FqFieldPtr& field, const Permutation& w);
/// I + a e_{i-1,i}.
GroupElement nu_s(int d, int i, const Laurent& a);
/// a at slot i-1, a^{-1} at slot i. Requires a to be an exact monomial.
GroupElement h_s(int d, int i, const Laurent& a);
/// -1 at slot i-1.
GroupElement delta_s(const FqFieldPtr& field, int d, int i);
/// Block form [[0, I_d], [X, 0]].
GroupElement u_matrix(const FqFieldPtr& field, int d);
GroupElement u_inv_matrix(const FqFieldPtr& field, int d);
/// diag(g^{digits[0]}, ..., g^{digits[d]}).
GroupElement torus_element(const FqFieldPtr& field, std::span<const std::int64_t> digits);
GroupElement diagonal(const FqFieldPtr& field, const std::vector<Laurent>& entries);

bool is_upper_triangular(const GroupElement& x);
/// Upper triangular mod X with diagonal congruent to 1.
bool in_I0(const GroupElement& x);
/// All known coefficients of x - y vanish.
bool agrees(const GroupElement& x, const GroupElement& y);

struct IwasawaDecomposition {
  GroupElement p;
  Permutation w;
  GroupElement i;
};

/// x = p M_w i with p upper triangular and i in I_0. Inverses are computed
/// to relative precision `precision`. Throws PrecisionError when a pivot
/// cannot be decided, DomainError when x is singular.
IwasawaDecomposition iwasawa_decompose(const GroupElement& x, std::int64_t precision = kDefaultPrecision);

/// Theta on an upper triangular p, read from the diagonal.
Scalar theta_of_p(const CharacterData& c, const GroupElement& p);

/// f_w(x).
Scalar evaluate_f(const CharacterData& c, const Permutation& w, const GroupElement& x,
                  std::int64_t precision = kDefaultPrecision);

/// The right-translates y -> y g_j whose values are summed by T_gen.
std::vector<GroupElement> coset_representatives(const FqFieldPtr& field, int d, const Generator& g);

/// (T_gen f_w)(v) for every v in W, by summing f_w over coset translates.
std::vector<Scalar> hecke_bruteforce(const CharacterData& c, const Generator& g, const Permutation& w,
                                     std::int64_t precision = kDefaultPrecision);

/// The whole matrix: column w is hecke_bruteforce(c, g, w).
Matrix<Scalar> hecke_bruteforce_matrix(const CharacterData& c, const Generator& g,
                                       std::int64_t precision = kDefaultPrecision);

struct OracleMismatch {
  std::string generator;
  std::string w;
  std::vector<std::string> expected;
  std::vector<std::string> got;
};

struct OracleReport {
  int d = 1;
  int q = 2;
  std::int64_t precision = kDefaultPrecision;
  std::size_t matches = 0;
  std::vector<OracleMismatch> mismatches;
  /// The brute-force matrices at precision and 2 * precision coincide.
  bool precision_stable = true;
  bool ok() const { return mismatches.empty() && precision_stable; }
};

struct RoundTripStats {
  std::size_t samples = 0;
  std::size_t failures = 0;
  /// Samples that needed the doubled precision.
  std::size_t retried = 0;
  bool ok() const { return failures == 0; }
};

/// Decomposes seeded random products p M_w i and checks that w is recovered,
/// the factors lie in P and I_0, and they recompose to the input.
RoundTripStats round_trip_check(int d, int q, std::size_t samples, std::uint64_t seed,
                                std::int64_t precision = kDefaultPrecision);

/// T_{s_1..s_d}, T_u, T_{u^{-1}} and the torus probes.
std::vector<Generator> oracle_generators(int d, int q);

/// Column-by-column comparison of hecke_bruteforce against operator_matrix.
/// A PrecisionError doubles the precision once.
OracleReport compare_closed_form(const CharacterData& c, std::int64_t precision = kDefaultPrecision);

}  // namespace hecke
