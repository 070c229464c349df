#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "hecke/fq.hpp"

namespace hecke {

/// Truncated Laurent series over F_q in the uniformizer X.
///
/// Coefficients at exponents below precision() are known; the rest are
/// unknown. precision() == kExact marks a Laurent polynomial known exactly.
class Laurent {
 public:
  static constexpr std::int64_t kExact = std::numeric_limits<std::int64_t>::max();

  explicit Laurent(FqFieldPtr field) : field_(std::move(field)) {}

  static Laurent zero(FqFieldPtr field) { return Laurent(std::move(field)); }
  /// c X^e, exact.
  static Laurent monomial(FqFieldPtr field, std::uint32_t c, std::int64_t e);
  static Laurent constant(FqFieldPtr field, std::uint32_t c) { return monomial(std::move(field), c, 0); }
  /// sum_k coeffs[k] X^{lo + k}, truncated at precision.
  static Laurent from_coefficients(FqFieldPtr field, std::int64_t lo, const std::vector<std::uint32_t>& coeffs,
                                   std::int64_t precision = kExact);

  const FqFieldPtr& field() const { return field_; }
  std::int64_t precision() const { return prec_; }
  bool is_exact() const { return prec_ == kExact; }
  /// True when no known coefficient is nonzero.
  bool looks_zero() const { return c_.empty(); }
  bool is_exact_zero() const { return c_.empty() && prec_ == kExact; }
  /// Exponent of the lowest nonzero coefficient; for looks_zero() the precision (a lower bound).
  std::int64_t valuation() const { return c_.empty() ? prec_ : lo_; }
  /// Lowest nonzero coefficient; requires !looks_zero().
  std::uint32_t leading() const { return c_.front(); }
  std::uint32_t coeff(std::int64_t e) const;

  Laurent operator+(const Laurent& o) const;
  Laurent operator-(const Laurent& o) const;
  Laurent operator-() const;
  Laurent operator*(const Laurent& o) const;
  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  /// Inverse with relative precision at most rel_precision (exact for exact monomials).
  /// Throws PrecisionError when the valuation is unknown.
  Laurent inverse(std::int64_t rel_precision) const;

  /// Known coefficients agree and both are known to the same point (or exactly).
  friend bool operator==(const Laurent& a, const Laurent& b) {
    return a.lo_ == b.lo_ && a.c_ == b.c_ && a.prec_ == b.prec_;
  }

  std::string to_string() const;

 private:
  void normalize();

  FqFieldPtr field_;
  std::int64_t lo_ = 0;
  std::vector<std::uint32_t> c_;
  std::int64_t prec_ = kExact;
};

}  // namespace hecke
