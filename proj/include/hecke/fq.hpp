#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace hecke {

class FqField;
using FqFieldPtr = std::shared_ptr<const FqField>;

/// The field with q = p^f elements, realized as F_p[x]/(P) with P the monic
/// irreducible of degree f whose integer code sum c_k p^k (k < f) is least.
/// Elements are encoded by the same code. The generator g is the least code
/// of multiplicative order q-1; discrete logs are table lookups.
class FqField {
 public:
  static constexpr int kMaxQ = 64;

  /// Shared instance for q. Throws DomainError unless q is a prime power <= 64.
  static FqFieldPtr get(int q);

  int p() const { return p_; }
  int f() const { return f_; }
  int q() const { return q_; }
  /// Coefficients c_0 .. c_{f-1} of P below the leading 1.
  const std::vector<int>& modulus() const { return modulus_; }
  std::uint32_t generator() const { return generator_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t inv(std::uint32_t a) const;
  /// g^k for any integer k.
  std::uint32_t exp(std::int64_t k) const;
  /// k in [0, q-1) with g^k = a. Throws DomainError for a = 0.
  int log(std::uint32_t a) const;
  std::uint32_t from_int(std::int64_t v) const;
  /// log of -1: (q-1)/2 for odd q, 0 in characteristic 2.
  int log_minus_one() const { return p_ == 2 ? 0 : (q_ - 1) / 2; }

  std::vector<int> coefficients(std::uint32_t a) const;
  std::uint32_t from_coefficients(const std::vector<int>& c) const;

  FqField(int p, int f);

 private:
  std::uint32_t poly_mul(std::uint32_t a, std::uint32_t b) const;

  int p_, f_, q_;
  std::vector<int> modulus_;
  std::uint32_t generator_ = 0;
  std::vector<std::uint32_t> exp_table_;  // g^k, k < q-1
  std::vector<int> log_table_;            // indexed by code
};

/// (p, f) with q = p^f, or nullopt-equivalent (0, 0) when q is not a prime power.
std::pair<int, int> prime_power(int q);

/// Value type over a shared field descriptor.
class FqElement {
 public:
  FqElement() = default;
  FqElement(FqFieldPtr field, std::uint32_t code) : field_(std::move(field)), code_(code) {}

  static FqElement zero(FqFieldPtr field) { return {std::move(field), 0}; }
  static FqElement one(FqFieldPtr field) { return {field, field->from_int(1)}; }
  static FqElement from_int(FqFieldPtr field, std::int64_t v) {
    auto c = field->from_int(v);
    return {std::move(field), c};
  }
  /// g^k.
  static FqElement generator_power(FqFieldPtr field, std::int64_t k) {
    auto c = field->exp(k);
    return {std::move(field), c};
  }

  const FqField& field() const { return *field_; }
  const FqFieldPtr& field_ptr() const { return field_; }
  std::uint32_t code() const { return code_; }
  bool is_zero() const { return code_ == 0; }
  int log() const { return field_->log(code_); }
  FqElement inverse() const { return {field_, field_->inv(code_)}; }
  std::vector<int> coefficients() const { return field_->coefficients(code_); }

  FqElement operator+(const FqElement& o) const { return {field_, field_->add(code_, o.code_)}; }
  FqElement operator-(const FqElement& o) const { return {field_, field_->sub(code_, o.code_)}; }
  FqElement operator-() const { return {field_, field_->neg(code_)}; }
  FqElement operator*(const FqElement& o) const { return {field_, field_->mul(code_, o.code_)}; }
  FqElement& operator+=(const FqElement& o) { return *this = *this + o; }
  FqElement& operator*=(const FqElement& o) { return *this = *this * o; }

  friend bool operator==(const FqElement& a, const FqElement& b) {
    return a.code_ == b.code_ && a.field_->q() == b.field_->q();
  }

  std::string to_string() const;

 private:
  FqFieldPtr field_;
  std::uint32_t code_ = 0;
};

}  // namespace hecke
