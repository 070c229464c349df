#include "hecke/oracle.hpp"

#include <algorithm>
#include <random>

#include "hecke/errors.hpp"
#include "hecke/psmod.hpp"
#include "hecke/relations.hpp"

namespace hecke {

namespace {

std::size_t dim(int d) { return static_cast<std::size_t>(d) + 1; }

Laurent one_of(const FqFieldPtr& field) { return Laurent::constant(field, field->from_int(1)); }

const FqFieldPtr& field_of(const GroupElement& x) { return x.zero().field(); }

}  // namespace

GroupElement group_identity(const FqFieldPtr& field, int d) {
  return GroupElement::identity(dim(d), Laurent::zero(field), one_of(field));
}

GroupElement permutation_matrix(const FqFieldPtr& field, const Permutation& w) {
  GroupElement m(dim(w.d()), dim(w.d()), Laurent::zero(field));
  for (int j = 0; j <= w.d(); ++j) m(static_cast<std::size_t>(w(j)), static_cast<std::size_t>(j)) = one_of(field);
  return m;
}

GroupElement nu_s(int d, int i, const Laurent& a) {
  auto m = group_identity(a.field(), d);
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i)) = a;
  return m;
}

GroupElement h_s(int d, int i, const Laurent& a) {
  if (!a.is_exact() || a.looks_zero()) throw DomainError("h_s: argument must be an exact nonzero monomial");
  auto m = group_identity(a.field(), d);
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = a;
  m(static_cast<std::size_t>(i), static_cast<std::size_t>(i)) = a.inverse(1);
  return m;
}

GroupElement delta_s(const FqFieldPtr& field, int d, int i) {
  auto m = group_identity(field, d);
  m(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)) = -one_of(field);
  return m;
}

GroupElement u_matrix(const FqFieldPtr& field, int d) {
  GroupElement m(dim(d), dim(d), Laurent::zero(field));
  for (std::size_t j = 1; j < dim(d); ++j) m(j - 1, j) = one_of(field);
  m(dim(d) - 1, 0) = Laurent::monomial(field, field->from_int(1), 1);
  return m;
}

GroupElement u_inv_matrix(const FqFieldPtr& field, int d) {
  GroupElement m(dim(d), dim(d), Laurent::zero(field));
  for (std::size_t j = 1; j < dim(d); ++j) m(j, j - 1) = one_of(field);
  m(0, dim(d) - 1) = Laurent::monomial(field, field->from_int(1), -1);
  return m;
}

GroupElement torus_element(const FqFieldPtr& field, std::span<const std::int64_t> digits) {
  std::vector<Laurent> entries;
  for (auto e : digits) entries.push_back(Laurent::constant(field, field->exp(e)));
  return diagonal(field, entries);
}

GroupElement diagonal(const FqFieldPtr& field, const std::vector<Laurent>& entries) {
  GroupElement m(entries.size(), entries.size(), Laurent::zero(field));
  for (std::size_t j = 0; j < entries.size(); ++j) m(j, j) = entries[j];
  return m;
}

bool is_upper_triangular(const GroupElement& x) {
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < r; ++c)
      if (!x(r, c).looks_zero()) return false;
  return true;
}

bool in_I0(const GroupElement& x) {
  const auto& field = field_of(x);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const Laurent& e = x(r, c);
      if (r == c) {
        if ((e - one_of(field)).valuation() < 1) return false;
      } else if (e.valuation() < (r > c ? 1 : 0)) {
        return false;
      }
    }
  return true;
}

bool agrees(const GroupElement& x, const GroupElement& y) {
  if (x.rows() != y.rows() || x.cols() != y.cols()) return false;
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c)
      if (!(x(r, c) - y(r, c)).looks_zero()) return false;
  return true;
}

IwasawaDecomposition iwasawa_decompose(const GroupElement& x, std::int64_t precision) {
  if (x.rows() != x.cols() || x.rows() < 2) throw SizeMismatchError("iwasawa_decompose: need a square matrix of size >= 2");
  const auto& field = field_of(x);
  const std::size_t n = x.rows();
  const Laurent zero = Laurent::zero(field);
  GroupElement a = x;
  GroupElement j = GroupElement::identity(n, zero, one_of(field));
  std::vector<bool> assigned(n, false);
  std::vector<int> images(n, -1);

  for (std::size_t row = n; row-- > 0;) {
    std::optional<std::size_t> pivot;
    for (std::size_t k = 0; k < n; ++k) {
      if (assigned[k] || a(row, k).looks_zero()) continue;
      if (!pivot || a(row, k).valuation() < a(row, *pivot).valuation()) pivot = k;
    }
    bool all_exact_zero = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (assigned[k] || !a(row, k).looks_zero()) continue;
      if (!a(row, k).is_exact()) {
        all_exact_zero = false;
        const std::int64_t bound = a(row, k).precision();
        if (pivot && (bound > a(row, *pivot).valuation() || (bound == a(row, *pivot).valuation() && k > *pivot)))
          continue;
        throw PrecisionError("iwasawa_decompose: pivot valuation undecided at row " + std::to_string(row));
      }
    }
    if (!pivot) {
      if (all_exact_zero) throw DomainError("iwasawa_decompose: matrix is singular");
      throw PrecisionError("iwasawa_decompose: no pivot at row " + std::to_string(row));
    }
    const std::size_t p = *pivot;
    const Laurent pivot_inv = a(row, p).inverse(precision);
    for (std::size_t k = 0; k < n; ++k) {
      if (assigned[k] || k == p || a(row, k).is_exact_zero()) continue;
      const Laurent c = a(row, k) * pivot_inv;
      for (std::size_t r = 0; r < n; ++r)
        if (!a(r, p).is_exact_zero()) a(r, k) = a(r, k) - c * a(r, p);
      a(row, k) = zero;
      for (std::size_t col = 0; col < n; ++col)
        if (!j(k, col).is_exact_zero()) j(p, col) = j(p, col) + c * j(k, col);
    }
    assigned[p] = true;
    images[p] = static_cast<int>(row);
  }

  Permutation w(images);
  GroupElement p_mat(n, n, zero);
  for (std::size_t col = 0; col < n; ++col)
    for (std::size_t r = 0; r < n; ++r) p_mat(r, static_cast<std::size_t>(images[col])) = a(r, col);
  return {std::move(p_mat), std::move(w), std::move(j)};
}

Scalar theta_of_p(const CharacterData& c, const GroupElement& p) {
  const auto& field = field_of(p);
  const auto ring = ScalarRing::get(c.q, c.r);
  std::int64_t zeta = 0;
  std::int64_t pi = 0;
  for (int j = 0; j <= c.d; ++j) {
    const Laurent& e = p(static_cast<std::size_t>(j), static_cast<std::size_t>(j));
    if (e.looks_zero()) throw PrecisionError("theta_of_p: diagonal entry with unknown valuation");
    const std::int64_t v = e.valuation();
    const auto kappa = static_cast<std::size_t>((c.d + 1 - j) % (c.d + 1));
    zeta += c.unit_exp[kappa] * v + c.theta_exp[static_cast<std::size_t>(j)] * field->log(e.leading());
    pi += c.pi_ord[kappa] * v;
  }
  return Scalar::monomial(ring, zeta, pi);
}

Scalar evaluate_f(const CharacterData& c, const Permutation& w, const GroupElement& x, std::int64_t precision) {
  if (w.d() != c.d || x.rows() != dim(c.d)) throw SizeMismatchError("evaluate_f: d mismatch");
  const auto dec = iwasawa_decompose(x, precision);
  if (!(dec.w == w)) return Scalar::zero(ScalarRing::get(c.q, c.r));
  return theta_of_p(c, dec.p);
}

std::vector<GroupElement> coset_representatives(const FqFieldPtr& field, int d, const Generator& g) {
  validate_generator(g, d);
  std::vector<GroupElement> out;
  switch (g.kind) {
    case Generator::Kind::S: {
      const auto s = permutation_matrix(field, Permutation::simple(d, g.i));
      out.push_back(nu_s(d, g.i, Laurent::zero(field)) * s);
      for (int k = 0; k + 1 < field->q(); ++k) out.push_back(nu_s(d, g.i, Laurent::constant(field, field->exp(k))) * s);
      break;
    }
    case Generator::Kind::U:
      out.push_back(u_inv_matrix(field, d));
      break;
    case Generator::Kind::UInv:
      out.push_back(u_matrix(field, d));
      break;
    case Generator::Kind::T: {
      std::vector<std::int64_t> inv;
      for (auto e : g.digits) inv.push_back(-e);
      out.push_back(torus_element(field, inv));
      break;
    }
  }
  return out;
}

Matrix<Scalar> hecke_bruteforce_matrix(const CharacterData& c, const Generator& g, std::int64_t precision) {
  const auto field = FqField::get(c.q);
  const auto ring = ScalarRing::get(c.q, c.r);
  const auto& group = WeylGroup::get(c.d);
  Matrix<Scalar> m(group.size(), group.size(), Scalar::zero(ring));
  const auto reps = coset_representatives(field, c.d, g);
  for (std::size_t v = 0; v < group.size(); ++v) {
    const auto mv = permutation_matrix(field, group[v]);
    for (const auto& rep : reps) {
      const auto dec = iwasawa_decompose(mv * rep, precision);
      const std::size_t w = group.index_of(dec.w);
      m(v, w) += theta_of_p(c, dec.p);
    }
  }
  return m;
}

std::vector<Scalar> hecke_bruteforce(const CharacterData& c, const Generator& g, const Permutation& w,
                                     std::int64_t precision) {
  const auto m = hecke_bruteforce_matrix(c, g, precision);
  const std::size_t col = WeylGroup::get(c.d).index_of(w);
  std::vector<Scalar> out;
  for (std::size_t row = 0; row < m.rows(); ++row) out.push_back(m(row, col));
  return out;
}

RoundTripStats round_trip_check(int d, int q, std::size_t samples, std::uint64_t seed, std::int64_t precision) {
  const auto field = FqField::get(q);
  const auto n = dim(d);
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::uint32_t> coef(0, static_cast<std::uint32_t>(q - 1));
  std::uniform_int_distribution<std::int64_t> val(-2, 2);
  std::uniform_int_distribution<std::int64_t> unit(0, q - 2);
  auto poly = [&](std::int64_t lo, std::size_t terms) {
    std::vector<std::uint32_t> c(terms);
    for (auto& x : c) x = coef(rng);
    return Laurent::from_coefficients(field, lo, c);
  };
  RoundTripStats stats;
  for (std::size_t k = 0; k < samples; ++k) {
    GroupElement p0(n, n, Laurent::zero(field)), i0 = group_identity(field, d);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r == c) {
          p0(r, c) = Laurent::monomial(field, field->exp(unit(rng)), val(rng)) * (one_of(field) + poly(1, 2));
          i0(r, c) = one_of(field) + poly(1, 2);
        } else if (r < c) {
          p0(r, c) = poly(val(rng), 3);
          i0(r, c) = poly(0, 3);
        } else {
          i0(r, c) = poly(1, 3);
        }
      }
    const auto w0 = lex_unrank(d, std::uniform_int_distribution<std::size_t>(0, factorial(d + 1) - 1)(rng));
    const auto x = p0 * permutation_matrix(field, w0) * i0;
    ++stats.samples;
    try {
      IwasawaDecomposition dec{x, w0, x};
      try {
        dec = iwasawa_decompose(x, precision);
      } catch (const PrecisionError&) {
        ++stats.retried;
        dec = iwasawa_decompose(x, 2 * precision);
      }
      const bool ok = dec.w == w0 && is_upper_triangular(dec.p) && in_I0(dec.i) &&
                      agrees(dec.p * permutation_matrix(field, dec.w) * dec.i, x);
      if (!ok) ++stats.failures;
    } catch (const PrecisionError&) {
      ++stats.failures;
    }
  }
  return stats;
}

std::vector<Generator> oracle_generators(int d, int q) {
  std::vector<Generator> out;
  for (int i = 1; i <= d; ++i) out.push_back(Generator::s(i));
  out.push_back(Generator::u());
  out.push_back(Generator::u_inv());
  for (auto& e : torus_probes(d, q)) out.push_back(Generator::t(e));
  return out;
}

OracleReport compare_closed_form(const CharacterData& c, std::int64_t precision) {
  OracleReport report;
  report.d = c.d;
  report.q = c.q;
  report.precision = precision;
  const auto& group = WeylGroup::get(c.d);
  const auto gens = oracle_generators(c.d, c.q);

  auto run_all = [&](std::int64_t n) {
    std::vector<Matrix<Scalar>> out;
    for (const auto& g : gens) out.push_back(hecke_bruteforce_matrix(c, g, n));
    return out;
  };
  std::vector<Matrix<Scalar>> brute;
  try {
    brute = run_all(report.precision);
  } catch (const PrecisionError&) {
    report.precision *= 2;
    brute = run_all(report.precision);
  }
  try {
    report.precision_stable = run_all(2 * report.precision) == brute;
  } catch (const PrecisionError&) {
    report.precision_stable = false;
  }

  for (std::size_t k = 0; k < gens.size(); ++k) {
    const auto closed = operator_matrix(c, gens[k]);
    for (std::size_t col = 0; col < group.size(); ++col) {
      bool same = true;
      for (std::size_t row = 0; row < group.size(); ++row)
        if (!(closed(row, col) == brute[k](row, col))) same = false;
      if (same) {
        ++report.matches;
        continue;
      }
      OracleMismatch mm{gens[k].name(), group[col].to_string(), {}, {}};
      for (std::size_t row = 0; row < group.size(); ++row) {
        mm.expected.push_back(closed(row, col).to_string());
        mm.got.push_back(brute[k](row, col).to_string());
      }
      report.mismatches.push_back(std::move(mm));
    }
  }
  return report;
}

}  // namespace hecke
