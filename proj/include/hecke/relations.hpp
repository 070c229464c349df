#pragma once

#include <algorithm>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "hecke/coxeter.hpp"
#include "hecke/matrix.hpp"

namespace hecke {

struct RelationResult {
  std::string relation;
  std::size_t instances = 0;
  std::size_t failures = 0;
  std::string first_failure;
  bool passed() const { return failures == 0; }
};

struct RelationReport {
  std::vector<RelationResult> results;

  bool all_passed() const {
    for (const auto& r : results)
      if (!r.passed()) return false;
    return true;
  }
  const RelationResult* find(const std::string& relation) const {
    for (const auto& r : results)
      if (r.relation == relation) return &r;
    return nullptr;
  }
};

/// Generator matrices of a module with basis indexed by W, in the
/// convention that composition of operators is the matrix product.
template <class T>
struct OperatorSource {
  int d = 1;
  int q = 2;
  T zero;
  T one;
  std::function<Matrix<T>(int i)> s;
  Matrix<T> u;
  Matrix<T> u_inv;
  std::function<Matrix<T>(const std::vector<std::int64_t>&)> torus;
  /// False when s(i) for i < d is itself the conjugate of s(d) by T_u powers;
  /// then the conjugation relation holds by construction and is skipped.
  bool independent_s = true;
};

template <class T>
Matrix<T> matrix_power(const Matrix<T>& m, int k, const T& zero, const T& one) {
  auto out = Matrix<T>::identity(m.rows(), zero, one);
  for (int j = 0; j < k; ++j) out = out * m;
  return out;
}

/// T_{u^{-1}}^{d-i} T_{s_d} T_u^{d-i}, the operator attached to s_i = ubar^{d-i} s_d ubar^{i-d}.
template <class T>
Matrix<T> conjugated_s(const OperatorSource<T>& src, const Matrix<T>& sd, int i) {
  const int k = src.d - i;
  return matrix_power(src.u_inv, k, src.zero, src.one) * sd * matrix_power(src.u, k, src.zero, src.one);
}

/// Digit tuples used to probe the torus relations.
inline std::vector<std::vector<std::int64_t>> torus_probes(int d, int q) {
  const auto len = static_cast<std::size_t>(d) + 1;
  std::vector<std::vector<std::int64_t>> out;
  out.emplace_back(len, 0);
  if (q <= 2) return out;
  for (std::size_t j = 0; j < len; ++j) {
    std::vector<std::int64_t> e(len, 0);
    e[j] = 1;
    out.push_back(std::move(e));
  }
  std::vector<std::int64_t> mixed(len);
  for (std::size_t j = 0; j < len; ++j) mixed[j] = static_cast<std::int64_t>((j + 1) % static_cast<std::size_t>(q - 1));
  out.push_back(mixed);
  return out;
}

/// Exact check of:
///   R1  T_{s_i} T_{s_j} = T_{s_j} T_{s_i} for |i - j| >= 2
///   R2  T_{s_i} T_{s_{i+1}} T_{s_i} = T_{s_{i+1}} T_{s_i} T_{s_{i+1}}
///   R3  T_u T_{u^{-1}} = 1 = T_{u^{-1}} T_u
///   R4  T_{s_i} = T_{u^{-1}}^{d-i} T_{s_d} T_u^{d-i}
///   R5  T_t T_{t'} = T_{tt'}
///   R6  T_t T_{s_d} = T_{s_d} T_{s_d t s_d}
///   R7  T_t T_u = T_u T_{ubar t ubar^{-1}}
///   R8  T_u^{d+1} commutes with T_{s_d}
template <class T>
RelationReport check_relation_suite(const OperatorSource<T>& src) {
  const int d = src.d;
  RelationReport report;
  auto record = [&](const std::string& name, bool ok, const std::string& where) {
    auto it = std::find_if(report.results.begin(), report.results.end(),
                           [&](const RelationResult& r) { return r.relation == name; });
    if (it == report.results.end()) {
      report.results.push_back({name, 0, 0, {}});
      it = report.results.end() - 1;
    }
    ++it->instances;
    if (!ok) {
      if (it->failures == 0) it->first_failure = where;
      ++it->failures;
    }
  };
  auto touch = [&](const std::string& name) {
    if (!report.find(name)) report.results.push_back({name, 0, 0, {}});
  };

  std::vector<Matrix<T>> s;
  for (int i = 1; i <= d; ++i) s.push_back(src.s(i));
  auto S = [&](int i) -> const Matrix<T>& { return s[static_cast<std::size_t>(i - 1)]; };
  const auto ident = Matrix<T>::identity(src.u.rows(), src.zero, src.one);

  touch("R1");
  for (int i = 1; i <= d; ++i)
    for (int j = i + 2; j <= d; ++j)
      record("R1", S(i) * S(j) == S(j) * S(i), "i=" + std::to_string(i) + " j=" + std::to_string(j));

  touch("R2");
  for (int i = 1; i < d; ++i)
    record("R2", S(i) * S(i + 1) * S(i) == S(i + 1) * S(i) * S(i + 1), "i=" + std::to_string(i));

  record("R3", src.u * src.u_inv == ident, "T_u T_u_inv");
  record("R3", src.u_inv * src.u == ident, "T_u_inv T_u");

  if (src.independent_s) {
    touch("R4");
    for (int i = 1; i < d; ++i) record("R4", S(i) == conjugated_s(src, S(d), i), "i=" + std::to_string(i));
  }

  const auto probes = torus_probes(d, src.q);
  auto digits_name = [](const std::vector<std::int64_t>& e) {
    std::ostringstream out;
    out << "(";
    for (std::size_t k = 0; k < e.size(); ++k) out << (k ? "," : "") << e[k];
    out << ")";
    return out.str();
  };
  for (const auto& a : probes) {
    const auto ta = src.torus(a);
    for (const auto& b : probes) {
      std::vector<std::int64_t> sum(a.size());
      for (std::size_t k = 0; k < a.size(); ++k) sum[k] = a[k] + b[k];
      record("R5", ta * src.torus(b) == src.torus(sum), "t=" + digits_name(a) + " t'=" + digits_name(b));
    }
    auto swapped = a;
    std::swap(swapped[static_cast<std::size_t>(d - 1)], swapped[static_cast<std::size_t>(d)]);
    record("R6", ta * S(d) == S(d) * src.torus(swapped), "t=" + digits_name(a));

    std::vector<std::int64_t> shifted(a.size());
    const auto u_bar = ubar(d, 1);
    for (int j = 0; j <= d; ++j) shifted[static_cast<std::size_t>(u_bar(j))] = a[static_cast<std::size_t>(j)];
    record("R7", ta * src.u == src.u * src.torus(shifted), "t=" + digits_name(a));
  }

  const auto central = matrix_power(src.u, d + 1, src.zero, src.one);
  record("R8", central * S(d) == S(d) * central, "T_u^{d+1} T_sd");
  return report;
}

}  // namespace hecke
