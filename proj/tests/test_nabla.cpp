#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "hecke/errors.hpp"
#include "hecke/nabla.hpp"

using namespace hecke;

namespace {

// Every nabla with nabla(e) = 0 and values in [-box, box] that passes the
// literal integration conditions, found by exhaustive search.
std::vector<NablaFunction> brute_force_nablas(const Weight& n, int r, int box) {
  const int d = static_cast<int>(n.size()) - 1;
  const auto elems = enumerate_w(d);
  std::vector<NablaFunction> out;
  NablaFunction cur{d, std::vector<std::int64_t>(elems.size(), 0)};
  auto ok = [&] {
    for (const auto& w : elems) {
      if (cur(w) - cur(w * ubar(d, 1)) != -n[static_cast<std::size_t>(d - w(d))]) return false;
      for (int i = 1; i <= d; ++i) {
        if (length(w * Permutation::simple(d, i)) < length(w)) continue;
        const auto ws = cur(w * Permutation::simple(d, i));
        if (ws > cur(w) || ws < cur(w) - r) return false;
      }
    }
    return true;
  };
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == elems.size()) {
      if (ok()) out.push_back(cur);
      return;
    }
    for (int v = -box; v <= box; ++v) {
      cur.values[k] = v;
      self(self, k + 1);
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace

TEST_CASE("build_nabla examples") {
  CHECK(build_nabla(Weight{0, 0, 0}, 1) == zero_nabla(2));
  auto nab = build_nabla(Weight{-1, 1}, 1);
  CHECK(nab(Permutation::identity(1)) == 0);
  CHECK(nab(Permutation::simple(1, 1)) == -1);
  CHECK_THROWS_AS(build_nabla(Weight{1, -1}, 1), PreconditionError);
}

TEST_CASE("checker agrees with brute force search") {
  for (int r : {1, 2}) {
    for (const auto& n : enumerate_balanced(2, r)) {
      auto found = brute_force_nablas(n, r, 3 * r);
      CHECK_FALSE(found.empty());
      for (const auto& f : found) CHECK(check_integration(f, n, r));
      auto built = build_nabla(n, r);
      CHECK(std::find(found.begin(), found.end(), built) != found.end());
    }
  }
}

TEST_CASE("build_nabla integrates every balanced weight") {
  for (int d = 1; d <= 4; ++d)
    for (int r = 1; r <= (d == 4 ? 1 : 2); ++r)
      for (const auto& n : enumerate_balanced(d, r)) {
        auto nab = build_nabla(n, r);
        CHECK(nab.at(0) == 0);
        auto res = check_integration(nab, n, r);
        CHECK_MESSAGE(res.ok, (res.witness ? res.witness->describe() : ""));
        for (auto& v : nab.values) v += 5;
        CHECK(check_integration(nab, n, r));
      }
}

TEST_CASE("check_integration witnesses") {
  auto res = check_integration(zero_nabla(1), Weight{-1, 1}, 1);
  REQUIRE_FALSE(res);
  CHECK(res.witness->condition == NablaCondition::UbarStep);
  CHECK(res.witness->w.is_identity());
  CHECK(check_integration(zero_nabla(3), Weight{0, 0, 0, 0}, 1));
  NablaFunction bad{1, {0, 1}};
  auto c = character_from_weight(Weight{0, 0}, 2, 1);
  auto eq = check_equinab(bad, c, EquinabMode::Full);
  CHECK_FALSE(eq);
}

TEST_CASE("equinab agrees with integration for characters from weights") {
  for (int d = 1; d <= 3; ++d)
    for (const auto& n : enumerate_balanced(d, 2)) {
      auto nab = build_nabla(n, 2);
      auto c = character_from_weight(n, 3, 2);
      CHECK(weight_of_character(c) == n);
      CHECK(check_equinab(nab, c, EquinabMode::Full));
      CHECK(check_equinab(nab, c, EquinabMode::SdOnly));
    }
}

TEST_CASE("sigma and partial") {
  auto zero = zero_nabla(2);
  auto s = sigma_from_nabla(zero, 1);
  const auto& g = WeylGroup::get(2);
  for (std::size_t idx = 0; idx < g.size(); ++idx) CHECK(s.values[idx].has_value() == ascends(g[idx], 2));
  for (std::size_t idx : g.sd_ascent_set()) CHECK(s.is(idx, 1));

  NablaFunction nab{1, {0, -1}};
  CHECK(sigma_from_nabla(nab, 2).is(0, 0));
  CHECK(sigma_from_nabla(nab, 1).is(0, -1));
  CHECK_THROWS_AS(sigma_from_nabla(NablaFunction{1, {0, 1}}, 1), PreconditionError);

  auto part = partial_from_nabla(nab, 1);
  CHECK(part.values == std::vector<std::int64_t>{1, -1});
  for (const auto& n : enumerate_balanced(3, 2)) {
    auto p = partial_from_nabla(build_nabla(n, 2), 2);
    const auto& g3 = WeylGroup::get(3);
    for (std::size_t idx = 0; idx < g3.size(); ++idx) {
      CHECK(p.values[idx] + p.values[g3.times_s(idx, 3)] == 0);
      CHECK(std::abs(p.values[idx]) <= 2);
    }
  }
  CHECK(enumerate_sigma(2).size() == 27);
}
