#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace hecke {

/// One of the Hecke operators T_{s_i}, T_u, T_{u^{-1}} or T_t, the last for
/// t in T cap I given by Teichmuller digits: t = diag(g^{digits[0]}, ..., g^{digits[d]}).
struct Generator {
  enum class Kind { S, U, UInv, T };

  Kind kind = Kind::S;
  int i = 0;
  std::vector<std::int64_t> digits;

  static Generator s(int i) { return {Kind::S, i, {}}; }
  static Generator u() { return {Kind::U, 0, {}}; }
  static Generator u_inv() { return {Kind::UInv, 0, {}}; }
  static Generator t(std::vector<std::int64_t> digits) { return {Kind::T, 0, std::move(digits)}; }
  /// The torus basis element with digit 1 at slot j.
  static Generator t_basis(int d, int j) {
    std::vector<std::int64_t> e(static_cast<std::size_t>(d) + 1, 0);
    e[static_cast<std::size_t>(j)] = 1;
    return t(std::move(e));
  }

  /// "T_s1", "T_u", "T_u_inv", "T_t(1,0,0)". Parsed back by parse_generator.
  std::string name() const {
    switch (kind) {
      case Kind::S:
        return "T_s" + std::to_string(i);
      case Kind::U:
        return "T_u";
      case Kind::UInv:
        return "T_u_inv";
      case Kind::T: {
        std::string out = "T_t(";
        for (std::size_t k = 0; k < digits.size(); ++k) out += (k ? "," : "") + std::to_string(digits[k]);
        return out + ")";
      }
    }
    return {};
  }

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Validates i in [1, d] and digit count d+1; throws DomainError otherwise.
void validate_generator(const Generator& g, int d);

}  // namespace hecke
