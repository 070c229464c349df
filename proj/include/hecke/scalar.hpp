#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hecke/fq.hpp"

namespace hecke {

/// Overflow-checked 128-bit integers: coefficients stay tiny in practice,
/// and a silent wrap would corrupt an exact identity.
using BigInt = boost::multiprecision::checked_int128_t;

/// An element of Z[1/q][zeta] with zeta a primitive (q-1)-th root of unity,
/// written as q^{-q_exp} * sum_k coeffs[k] zeta^k in the power basis
/// modulo the (q-1)-th cyclotomic polynomial.
///
/// Normal form: q_exp >= 0, and q_exp > 0 only if some coefficient is not
/// divisible by q. Zero has q_exp = 0. Equality is equality of normal forms.
struct CycInt {
  std::vector<BigInt> coeffs;
  int q_exp = 0;

  bool is_zero() const;
  friend bool operator==(const CycInt&, const CycInt&) = default;
};

class ScalarRing;
using ScalarRingPtr = std::shared_ptr<const ScalarRing>;

/// Parameters (p, f, q = p^f, r) of the coefficient ring generated by pi,
/// zeta and q^{-1} subject to pi^r = q.
class ScalarRing {
 public:
  static ScalarRingPtr get(int q, int r);

  ScalarRing(int q, int r);

  int p() const { return p_; }
  int f() const { return f_; }
  int q() const { return q_; }
  int r() const { return r_; }
  /// Degree of the cyclotomic modulus, phi(q-1).
  int degree() const { return static_cast<int>(cyclotomic_.size()) - 1; }
  /// Coefficients of Phi_{q-1}, low degree first, monic.
  const std::vector<BigInt>& cyclotomic() const { return cyclotomic_; }
  const FqFieldPtr& residue_field() const { return field_; }

  bool same_parameters(const ScalarRing& o) const { return q_ == o.q_ && r_ == o.r_; }

  CycInt cyc_zero() const;
  CycInt cyc_from_int(std::int64_t v) const;
  /// zeta^k for any integer k.
  CycInt cyc_zeta(std::int64_t k) const;
  CycInt cyc_add(const CycInt& a, const CycInt& b) const;
  CycInt cyc_neg(const CycInt& a) const;
  CycInt cyc_mul(const CycInt& a, const CycInt& b) const;
  /// Multiply by q^k, k of either sign.
  CycInt cyc_scale_q(const CycInt& a, int k) const;
  void normalize(CycInt& a) const;

 private:
  int p_, f_, q_, r_;
  std::vector<BigInt> cyclotomic_;
  std::vector<CycInt> zeta_powers_;  // zeta^k, 0 <= k < q-1
  FqFieldPtr field_;
};

/// sum_{i<r} a_i pi^i with a_i in CycInt; pi^r is rewritten as q.
class Scalar {
 public:
  explicit Scalar(ScalarRingPtr ring);

  static Scalar zero(ScalarRingPtr ring) { return Scalar(std::move(ring)); }
  static Scalar from_int(ScalarRingPtr ring, std::int64_t v);
  /// zeta^zeta_exp * pi^pi_exp for arbitrary integers (pi^{-1} = pi^{r-1}/q).
  static Scalar monomial(ScalarRingPtr ring, std::int64_t zeta_exp, std::int64_t pi_exp);
  static Scalar from_coefficients(ScalarRingPtr ring, std::vector<CycInt> coeffs);

  const ScalarRing& ring() const { return *ring_; }
  const ScalarRingPtr& ring_ptr() const { return ring_; }
  /// a_i, 0 <= i < r.
  const CycInt& coeff(int pi_degree) const { return a_[static_cast<std::size_t>(pi_degree)]; }
  const std::vector<CycInt>& coeffs() const { return a_; }

  bool is_zero() const;
  bool is_one() const;

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator-() const;
  Scalar operator*(const Scalar& o) const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void check_ring(const Scalar& o) const;

  ScalarRingPtr ring_;
  std::vector<CycInt> a_;
};

/// Sufficient integrality test: no coefficient carries a q-denominator.
/// Exact on monomials zeta^a pi^m and on kappa(pi^r - 1).
bool is_integral(const Scalar& a);

/// min_i (i + r * v_q(a_i)) with v_q the q-content exponent of a_i; a lower
/// bound for ord_K(a), exact on monomials. nullopt stands for +infinity.
std::optional<std::int64_t> valuation_floor(const Scalar& a);

/// Ring map to F_q: pi -> 0, zeta -> g, integers mod p.
/// Throws PreconditionError unless is_integral(a).
FqElement reduce_mod_pi(const Scalar& a);

/// The root of unity zeta^k with reduce_mod_pi(zeta^k) = x. Throws DomainError for x = 0.
Scalar teichmuller(const FqElement& x, ScalarRingPtr ring);

}  // namespace hecke
