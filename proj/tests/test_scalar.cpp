#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "hecke/errors.hpp"
#include "hecke/fq.hpp"
#include "hecke/scalar.hpp"

using namespace hecke;

namespace {

const int kSmallQ[] = {2, 3, 4, 5, 7, 8, 9};

}  // namespace

TEST_CASE("prime powers") {
  CHECK(prime_power(9) == std::pair{3, 2});
  CHECK(prime_power(8) == std::pair{2, 3});
  CHECK(prime_power(6) == std::pair{0, 0});
  CHECK(prime_power(1) == std::pair{0, 0});
  CHECK_THROWS_AS(FqField::get(6), DomainError);
  CHECK_THROWS_AS(FqField::get(67), DomainError);
}

TEST_CASE("finite field axioms by brute force") {
  for (int q : {2, 3, 4, 5, 8, 9, 16, 25, 27, 32, 49, 64}) {
    auto field = FqField::get(q);
    CHECK(field->q() == q);
    // every nonzero element has an inverse and the generator has order q-1
    std::set<std::uint32_t> powers;
    std::uint32_t x = field->from_int(1);
    for (int k = 0; k < q - 1; ++k) {
      powers.insert(x);
      x = field->mul(x, field->generator());
    }
    CHECK(x == field->from_int(1));
    CHECK(powers.size() == static_cast<std::size_t>(q - 1));
    for (std::uint32_t a = 0; a < static_cast<std::uint32_t>(q); ++a) {
      CHECK(field->add(a, field->neg(a)) == 0);
      if (a) CHECK(field->mul(a, field->inv(a)) == field->from_int(1));
      for (std::uint32_t b = 0; b < static_cast<std::uint32_t>(q); b += 3) {
        CHECK(field->mul(a, b) == field->mul(b, a));
        CHECK(field->mul(a, field->add(b, 1)) == field->add(field->mul(a, b), a));
      }
    }
  }
}

TEST_CASE("defining relations") {
  for (int r : {1, 2, 3}) {
    auto ring = ScalarRing::get(5, r);
    const auto q = Scalar::from_int(ring, 5);
    CHECK(Scalar::monomial(ring, 0, 1) * Scalar::monomial(ring, 0, r - 1) == q);
    CHECK(Scalar::monomial(ring, 4, 0) == Scalar::from_int(ring, 1));
    CHECK(Scalar::monomial(ring, 0, r) - Scalar::from_int(ring, 1) == Scalar::from_int(ring, 4));
    CHECK(Scalar::monomial(ring, 0, -1) * Scalar::monomial(ring, 0, 1) == Scalar::from_int(ring, 1));
    CHECK((Scalar::monomial(ring, 3, 7) * Scalar::monomial(ring, 1, -7)).is_one());
  }
  CHECK_THROWS_AS(Scalar::from_int(ScalarRing::get(3, 1), 1) + Scalar::from_int(ScalarRing::get(3, 2), 1),
                  ParameterMismatchError);
}

TEST_CASE("roots of unity are exact") {
  for (int q : kSmallQ) {
    auto ring = ScalarRing::get(q, 2);
    const auto one = Scalar::from_int(ring, 1);
    for (int k = 1; k < q - 1; ++k) CHECK_FALSE(Scalar::monomial(ring, k, 0) == one);
    CHECK(Scalar::monomial(ring, q - 1, 0) == one);
    for (int j = -3; j <= 2 * q; ++j) {
      auto sum = Scalar::zero(ring);
      for (int a = 0; a < q - 1; ++a) sum += Scalar::monomial(ring, static_cast<std::int64_t>(j) * a, 0);
      CHECK(sum == Scalar::from_int(ring, j % (q - 1) == 0 ? q - 1 : 0));
    }
  }
}

TEST_CASE("integrality and valuation") {
  for (int r : {1, 2, 3}) {
    auto ring = ScalarRing::get(3, r);
    for (int m = 0; m < 7; ++m) CHECK(is_integral(Scalar::monomial(ring, 1, m)));
    CHECK_FALSE(is_integral(Scalar::monomial(ring, 0, -1)));
    for (int kappa : {1, -1}) {
      auto x = Scalar::from_int(ring, kappa) * (Scalar::monomial(ring, 0, r) - Scalar::from_int(ring, 1));
      CHECK(is_integral(x));
      CHECK(x == Scalar::from_int(ring, kappa * 2));
      CHECK(reduce_mod_pi(x) == FqElement::from_int(ring->residue_field(), -kappa));
    }
    CHECK_FALSE(valuation_floor(Scalar::zero(ring)).has_value());
    CHECK(*valuation_floor(Scalar::monomial(ring, 3, 5)) == 5);
    CHECK(*valuation_floor(Scalar::monomial(ring, 0, -4)) == -4);
    CHECK(*valuation_floor(Scalar::from_int(ring, 3) * Scalar::monomial(ring, 0, 1)) == r + 1);
    for (int a = -5; a <= 5; ++a)
      for (int b = -5; b <= 5; ++b) {
        auto x = Scalar::monomial(ring, a, a) + Scalar::monomial(ring, 0, a + 1);
        auto y = Scalar::monomial(ring, b, b);
        CHECK(*valuation_floor(x * y) >= *valuation_floor(x) + *valuation_floor(y));
        CHECK(*valuation_floor(Scalar::monomial(ring, a, a) * y) == a + b);
      }
  }
}

TEST_CASE("reduction and Teichmuller lifts") {
  for (int q : kSmallQ) {
    auto ring = ScalarRing::get(q, 2);
    const auto& field = ring->residue_field();
    CHECK(reduce_mod_pi(Scalar::monomial(ring, 0, 1)).is_zero());
    for (int j = 0; j < q - 1; ++j)
      CHECK(reduce_mod_pi(Scalar::monomial(ring, j, 0)) == FqElement::generator_power(field, j));
    for (std::uint32_t code = 1; code < static_cast<std::uint32_t>(q); ++code) {
      FqElement x(field, code);
      CHECK(reduce_mod_pi(teichmuller(x, ring)) == x);
    }
    CHECK(teichmuller(FqElement::one(field), ring).is_one());
    CHECK(teichmuller(FqElement::generator_power(field, 1), ring) == Scalar::monomial(ring, 1, 0));
    if (q % 2 == 1) {
      auto minus_one = FqElement::generator_power(field, (q - 1) / 2);
      CHECK(minus_one == -FqElement::one(field));
      CHECK(teichmuller(minus_one, ring) == Scalar::from_int(ring, -1));
    }
    CHECK_THROWS_AS(teichmuller(FqElement::zero(field), ring), DomainError);
    CHECK_THROWS_AS(reduce_mod_pi(Scalar::monomial(ring, 0, -1)), PreconditionError);
    // ring homomorphism on a few products
    for (int a = 0; a < q; ++a)
      for (int b = 0; b < 3; ++b) {
        auto x = Scalar::monomial(ring, a, 0) + Scalar::from_int(ring, b);
        auto y = Scalar::monomial(ring, b, 0) - Scalar::monomial(ring, 1, 1);
        CHECK(reduce_mod_pi(x * y) == reduce_mod_pi(x) * reduce_mod_pi(y));
        CHECK(reduce_mod_pi(x + y) == reduce_mod_pi(x) + reduce_mod_pi(y));
      }
  }
}
