#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "hecke/errors.hpp"
#include "hecke/oracle.hpp"
#include "hecke/psmod.hpp"

using namespace hecke;

namespace {

Laurent mono(const FqFieldPtr& f, std::int64_t c, std::int64_t e) { return Laurent::monomial(f, f->from_int(c), e); }

std::vector<Laurent> units_of(const FqFieldPtr& f) {
  std::vector<Laurent> out;
  for (int k = 0; k + 1 < f->q(); ++k) out.push_back(Laurent::constant(f, f->exp(k)));
  return out;
}

Laurent random_poly(const FqFieldPtr& f, std::mt19937_64& rng, std::int64_t lo, std::size_t terms) {
  std::uniform_int_distribution<std::uint32_t> coef(0, static_cast<std::uint32_t>(f->q() - 1));
  std::vector<std::uint32_t> c(terms);
  for (auto& x : c) x = coef(rng);
  return Laurent::from_coefficients(f, lo, c);
}

Laurent random_unit_series(const FqFieldPtr& f, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> k(0, f->q() - 2);
  return Laurent::constant(f, f->exp(k(rng))) + random_poly(f, rng, 1, 2);
}

}  // namespace

TEST_CASE("Laurent arithmetic") {
  auto f = FqField::get(3);
  auto one = mono(f, 1, 0);
  auto x = mono(f, 1, 1);
  auto a = one + x;
  auto inv = a.inverse(8);
  CHECK(inv.precision() == 8);
  auto prod = a * inv;
  CHECK(prod.precision() == 8);
  CHECK((prod - one).looks_zero());
  CHECK(inv.coeff(5) == f->from_int(-1));
  auto b = mono(f, 2, -3) * x;
  CHECK(b.valuation() == -2);
  CHECK(b.inverse(4) == mono(f, 2, 2));
  CHECK((a - a).is_exact_zero());
  CHECK_THROWS_AS(Laurent::zero(f).inverse(4), DomainError);
  auto fuzzy = Laurent::from_coefficients(f, 0, {}, 3);
  CHECK(fuzzy.looks_zero());
  CHECK_FALSE(fuzzy.is_exact_zero());
  CHECK_THROWS_AS(fuzzy.inverse(4), PrecisionError);
  CHECK((fuzzy * x).precision() == 4);
}

TEST_CASE("group element building blocks") {
  for (int q : {2, 3, 4}) {
    auto f = FqField::get(q);
    for (int d = 1; d <= 3; ++d) {
      auto id = group_identity(f, d);
      CHECK(agrees(u_matrix(f, d) * u_inv_matrix(f, d), id));
      CHECK(agrees(permutation_matrix(f, ubar(d, 1)) * diagonal(f, [&] {
                     std::vector<Laurent> e(static_cast<std::size_t>(d) + 1, mono(f, 1, 0));
                     e[0] = mono(f, 1, 1);
                     return e;
                   }()),
                   u_matrix(f, d)));
      for (const auto& w : enumerate_w(d)) {
        const auto mw = permutation_matrix(f, w);
        for (const auto& v : enumerate_w(d))
          CHECK(agrees(mw * permutation_matrix(f, v), permutation_matrix(f, w * v)));
      }
    }
  }
}

TEST_CASE("decomposition of trivial inputs") {
  auto f = FqField::get(3);
  for (int d = 1; d <= 2; ++d) {
    const auto id = group_identity(f, d);
    for (const auto& w : enumerate_w(d)) {
      auto dec = iwasawa_decompose(permutation_matrix(f, w));
      CHECK(dec.w == w);
      CHECK(agrees(dec.p, id));
      CHECK(agrees(dec.i, id));
    }
    auto x = id;
    x(0, 0) = mono(f, 1, 0) + mono(f, 2, 1);
    x(0, static_cast<std::size_t>(d)) = mono(f, 1, 0) + mono(f, 1, 3);
    x(static_cast<std::size_t>(d), 0) = mono(f, 2, 1);
    REQUIRE(in_I0(x));
    auto dec = iwasawa_decompose(x);
    CHECK(dec.w.is_identity());
    CHECK(in_I0(dec.i));
    CHECK(agrees(dec.p * dec.i, x));
  }
  GroupElement singular(2, 2, Laurent::zero(f));
  singular(0, 0) = mono(f, 1, 0);
  singular(0, 1) = mono(f, 1, 0);
  CHECK_THROWS_AS(iwasawa_decompose(singular), DomainError);
}

TEST_CASE("conjugate of s nu_s(a) s factors through s") {
  for (int q : {2, 3, 4, 5}) {
    auto f = FqField::get(q);
    for (int d = 1; d <= 3; ++d)
      for (int i = 1; i <= d; ++i) {
        const auto s = permutation_matrix(f, Permutation::simple(d, i));
        std::vector<Laurent> as = units_of(f);
        as.push_back(mono(f, 1, 2));
        as.push_back(mono(f, -1, -1));
        for (const auto& a : as) {
          const auto ainv = a.inverse(1);
          const auto lhs = s * nu_s(d, i, a) * s;
          const auto rhs = h_s(d, i, ainv) * nu_s(d, i, a) * delta_s(f, d, i) * s * nu_s(d, i, ainv);
          CHECK(agrees(lhs, rhs));
        }
      }
  }
  auto f = FqField::get(3);
  for (const auto& a : units_of(f)) {
    const auto x = permutation_matrix(f, Permutation::simple(1, 1)) * nu_s(1, 1, a) *
                   permutation_matrix(f, Permutation::simple(1, 1));
    auto dec = iwasawa_decompose(x);
    CHECK(dec.w == Permutation::simple(1, 1));
    const auto expected_p = h_s(1, 1, a.inverse(1)) * nu_s(1, 1, a) * delta_s(f, 1, 1);
    for (std::size_t j = 0; j < 2; ++j) CHECK(dec.p(j, j) == expected_p(j, j));
    CHECK(agrees(dec.p * permutation_matrix(f, dec.w) * dec.i, x));
  }
}

TEST_CASE("conjugating nu_s along an ascent") {
  auto f = FqField::get(3);
  for (int d = 1; d <= 3; ++d)
    for (const auto& w : enumerate_w(d))
      for (int i = 1; i <= d; ++i) {
        if (!ascends(w, i)) continue;
        const auto b = mono(f, 2, -1) + mono(f, 1, 0);
        const auto m = permutation_matrix(f, w) * nu_s(d, i, b) * permutation_matrix(f, w.inverse());
        for (int r = 0; r <= d; ++r)
          for (int c = 0; c <= d; ++c) {
            const auto& e = m(static_cast<std::size_t>(r), static_cast<std::size_t>(c));
            if (r == c)
              CHECK(e == mono(f, 1, 0));
            else if (r == w(i - 1) && c == w(i))
              CHECK(e == b);
            else
              CHECK(e.is_exact_zero());
          }
        CHECK(w(i - 1) < w(i));
      }
}

TEST_CASE("translates of nu_s(a) s avoid the forbidden cells") {
  for (int q : {2, 3}) {
    auto f = FqField::get(q);
    std::vector<Laurent> reps{Laurent::zero(f)};
    for (auto& a : units_of(f)) reps.push_back(a);
    for (int d = 1; d <= 2; ++d) {
      const auto& group = WeylGroup::get(d);
      for (int i = 1; i <= d; ++i) {
        const auto s = permutation_matrix(f, Permutation::simple(d, i));
        for (const auto& w : group.elements()) {
          const auto ws = w * Permutation::simple(d, i);
          for (std::size_t k = 0; k < reps.size(); ++k) {
            for (const auto& v : group.elements()) {
              const auto cell = iwasawa_decompose(permutation_matrix(f, v) * nu_s(d, i, reps[k]) * s).w;
              if (ascends(w, i) && v == ws && k > 0) CHECK_FALSE(cell == w);
              if (ascends(w, i) && !(v == ws)) CHECK_FALSE(cell == w);
              if (!(v == w) && !(v == ws)) CHECK_FALSE(cell == w);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("evaluate_f on W and on the torus") {
  for (int q : {3, 4}) {
    auto f = FqField::get(q);
    auto ring = ScalarRing::get(q, 2);
    for (int d = 1; d <= 2; ++d) {
      const auto len = static_cast<std::size_t>(d) + 1;
      std::vector<std::int64_t> theta(len), ords(len, 0), units(len);
      for (std::size_t j = 0; j < len; ++j) {
        theta[j] = static_cast<std::int64_t>(j + 1);
        units[j] = static_cast<std::int64_t>(2 * j + 1);
      }
      ords[0] = 3;
      ords[len - 1] = -1;
      const auto c = make_character(theta, ords, units, q, 2);
      for (const auto& w : enumerate_w(d)) {
        for (const auto& v : enumerate_w(d)) {
          const auto value = evaluate_f(c, w, permutation_matrix(f, v));
          if (v == w)
            CHECK(value.is_one());
          else
            CHECK(value.is_zero());
        }
        // t = diag(X^{k_j} g^{e_j})
        std::vector<std::int64_t> ks(len), es(len);
        std::vector<Laurent> diag;
        for (std::size_t j = 0; j < len; ++j) {
          ks[j] = static_cast<std::int64_t>(j) - 1;
          es[j] = static_cast<std::int64_t>(j * j + 1);
          diag.push_back(Laurent::monomial(f, f->exp(es[j]), ks[j]));
        }
        const auto got = evaluate_f(c, w, diagonal(f, diag) * permutation_matrix(f, w));
        std::int64_t digit_exp = 0;
        for (std::size_t j = 0; j < len; ++j) digit_exp += c.theta_exp[j] * es[j];
        Scalar lhs = got;
        Scalar rhs = Scalar::monomial(ring, digit_exp, 0);
        for (std::size_t j = 0; j < len; ++j) {
          // any permutation with v(0) = j has t_v carrying p_F at slot j
          std::vector<int> img(len);
          img[0] = static_cast<int>(j);
          int next = 0;
          for (std::size_t k = 1; k < len; ++k) {
            if (next == static_cast<int>(j)) ++next;
            img[k] = next++;
          }
          const auto th = theta_of_t(c, ring, Permutation(img));
          for (std::int64_t k = 0; k < std::abs(ks[j]); ++k) (ks[j] > 0 ? rhs : lhs) *= th;
        }
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("brute-force operators at d = 1") {
  const auto e = Permutation::identity(1);
  const auto s = Permutation::simple(1, 1);
  for (int q : {2, 3, 5}) {
    auto triv = trivial_character(1, q, 1);
    auto ring = ScalarRing::get(q, 1);
    auto col = hecke_bruteforce(triv, Generator::s(1), e);
    CHECK(col[0].is_zero());
    CHECK(col[1].is_one());
    col = hecke_bruteforce(triv, Generator::s(1), s);
    CHECK(col[0] == Scalar::from_int(ring, q));
    CHECK(col[1] == Scalar::from_int(ring, q - 1));
  }
  auto c = make_character({1, 3}, {0, 0}, {0, 0}, 5, 1);
  auto ring = ScalarRing::get(5, 1);
  const Generator t = Generator::t({1, 2});
  for (const auto& w : {e, s}) {
    auto col = hecke_bruteforce(c, t, w);
    const auto idx = WeylGroup::get(1).index_of(w);
    // theta(w t^{-1} w^{-1}) puts g^{-digits[j]} at slot w(j)
    std::int64_t expo = 0;
    for (int j = 0; j <= 1; ++j) expo -= c.theta_exp[static_cast<std::size_t>(w(j))] * t.digits[static_cast<std::size_t>(j)];
    CHECK(col[idx] == Scalar::monomial(ring, expo, 0));
    CHECK(col[1 - idx].is_zero());
  }
}

TEST_CASE("closed forms agree with the brute force") {
  auto r1 = compare_closed_form(trivial_character(1, 2, 1));
  CHECK(r1.ok());
  CHECK(r1.matches == 8);
  auto r2 = compare_closed_form(make_character({0, 1}, {0, 0}, {0, 0}, 3, 1));
  CHECK(r2.ok());
  CHECK(r2.mismatches.empty());
  auto r3 = compare_closed_form(trivial_character(2, 2, 1));
  CHECK(r3.ok());
  CHECK(r3.matches == 6 * oracle_generators(2, 2).size());
  auto r4 = compare_closed_form(make_character({0, 1, 1}, {2, -1, -1}, {1, 0, 1}, 3, 2), 16);
  CHECK(r4.ok());
  for (const auto& m : r4.mismatches) MESSAGE(m.generator << " " << m.w);
}

TEST_CASE("decomposition round trip on seeded samples") {
  std::mt19937_64 rng(20261016);
  int retried = 0;
  for (int sample = 0; sample < 1000; ++sample) {
    const int d = 1 + sample % 2;
    const int q = (sample / 2) % 2 == 0 ? 2 : 3;
    auto f = FqField::get(q);
    const auto n = static_cast<std::size_t>(d) + 1;
    std::uniform_int_distribution<std::int64_t> val(-2, 2);
    GroupElement p0(n, n, Laurent::zero(f)), i0 = group_identity(f, d);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        if (r == c) {
          p0(r, c) = mono(f, 1, val(rng)) * random_unit_series(f, rng);
          i0(r, c) = mono(f, 1, 0) + random_poly(f, rng, 1, 2);
        } else if (r < c) {
          p0(r, c) = random_poly(f, rng, val(rng), 3);
          i0(r, c) = random_poly(f, rng, 0, 3);
        } else {
          i0(r, c) = random_poly(f, rng, 1, 3);
        }
      }
    const auto w0 = lex_unrank(d, std::uniform_int_distribution<std::size_t>(0, factorial(d + 1) - 1)(rng));
    const auto x = p0 * permutation_matrix(f, w0) * i0;
    IwasawaDecomposition dec{x, w0, x};
    try {
      dec = iwasawa_decompose(x, 8);
    } catch (const PrecisionError&) {
      ++retried;
      dec = iwasawa_decompose(x, 16);
    }
    CHECK(dec.w == w0);
    CHECK(is_upper_triangular(dec.p));
    CHECK(in_I0(dec.i));
    CHECK(agrees(dec.p * permutation_matrix(f, dec.w) * dec.i, x));
  }
  CHECK(retried == 0);
}

TEST_CASE("relation orientations calibrated on coset sums") {
  for (int q : {2, 3}) {
    const auto c = make_character({0, 1, 1}, {1, 1, -2}, {0, 1, 0}, q, 2);
    const auto ring = ScalarRing::get(q, 2);
    const auto zero = Scalar::zero(ring);
    const auto one = Scalar::from_int(ring, 1);
    const auto u = hecke_bruteforce_matrix(c, Generator::u());
    const auto uinv = hecke_bruteforce_matrix(c, Generator::u_inv());
    const auto sd = hecke_bruteforce_matrix(c, Generator::s(2));
    CHECK(u * uinv == Matrix<Scalar>::identity(u.rows(), zero, one));
    // T_{s_i} = T_{u^{-1}}^{d-i} T_{s_d} T_u^{d-i}
    CHECK(hecke_bruteforce_matrix(c, Generator::s(1)) == uinv * sd * u);
    // T_t T_{s_d} = T_{s_d} T_{t'} with t' swapping the last two digits
    for (const auto& e : torus_probes(2, q)) {
      auto swapped = e;
      std::swap(swapped[1], swapped[2]);
      CHECK(hecke_bruteforce_matrix(c, Generator::t(e)) * sd == sd * hecke_bruteforce_matrix(c, Generator::t(swapped)));
    }
  }
}
