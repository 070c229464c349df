#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "hecke/errors.hpp"
#include "hecke/weights.hpp"

using namespace hecke;

namespace {

// Subset inequalities from explicit subset lists rather than bitmask sums.
bool balanced_oracle(const Weight& n, int r) {
  const int size = static_cast<int>(n.size());
  long total = 0;
  for (auto x : n) total += x;
  if (total != 0) return false;
  std::vector<std::vector<int>> subsets{{}};
  for (int i = 0; i < size; ++i) {
    const auto count = subsets.size();
    for (std::size_t k = 0; k < count; ++k) {
      auto s = subsets[k];
      s.push_back(i);
      subsets.push_back(s);
    }
  }
  for (const auto& sub : subsets) {
    std::vector<int> comp;
    for (int i = 0; i < size; ++i)
      if (std::find(sub.begin(), sub.end(), i) == sub.end()) comp.push_back(i);
    long sum = 0;
    for (int i : sub) sum += n[static_cast<std::size_t>(i)];
    if (sum > r * delta(sub) || sum < -r * delta(comp)) return false;
  }
  return true;
}

std::vector<Weight> box_weights(int d, int r) {
  std::vector<Weight> out;
  Weight cur(static_cast<std::size_t>(d) + 1);
  auto rec = [&](auto&& self, int i) -> void {
    if (i > d) {
      if (balanced_oracle(cur, r)) out.push_back(cur);
      return;
    }
    for (std::int64_t v = -r * d; v <= r * d; ++v) {
      cur[static_cast<std::size_t>(i)] = v;
      self(self, i + 1);
    }
  };
  rec(rec, 0);
  return out;
}

}  // namespace

TEST_CASE("delta") {
  CHECK(delta(std::vector<int>{}) == 0);
  CHECK(delta(std::vector<int>{0, 1, 2, 3}) == 0);
  CHECK(delta(std::vector<int>{2, 4}) == 5);
  CHECK(delta_mask(0b10100) == 5);
}

TEST_CASE("delta complement identity") {
  for (int d = 1; d <= 5; ++d) {
    const std::uint32_t full = (1u << (d + 1)) - 1;
    for (std::uint32_t mask = 0; mask <= full; ++mask) {
      std::uint32_t mirrored = 0;
      for (int i = 0; i <= d; ++i)
        if (!(mask & (1u << i))) mirrored |= 1u << (d - i);
      CHECK(delta_mask(mask) == delta_mask(mirrored));
    }
  }
}

TEST_CASE("is_balanced examples") {
  CHECK(is_balanced(Weight{0, 0, 0}, 1));
  CHECK(is_balanced(Weight{-1, 0, 1}, 1));
  auto bad = is_balanced(Weight{1, -1}, 3);
  REQUIRE_FALSE(bad);
  CHECK(bad.witness->subset == std::vector<int>{0});
  CHECK(bad.witness->side == BalanceFailure::Upper);
  auto nonzero = is_balanced(Weight{0, 1}, 1);
  REQUIRE_FALSE(nonzero);
  CHECK(nonzero.witness->side == BalanceFailure::NonzeroSum);
}

TEST_CASE("enumeration matches the oracle") {
  CHECK(enumerate_balanced(1, 1) == std::vector<Weight>{{-1, 1}, {0, 0}});
  CHECK(enumerate_balanced(1, 2) == std::vector<Weight>{{-2, 2}, {-1, 1}, {0, 0}});
  for (int d = 1; d <= 2; ++d)
    for (int r = 1; r <= 2; ++r) CHECK(enumerate_balanced(d, r) == box_weights(d, r));
  CHECK_THROWS_AS(enumerate_balanced(5, 1), ResourceBoundError);
  for (int d = 1; d <= 3; ++d) {
    auto all = enumerate_balanced(d, 2);
    CHECK(std::find(all.begin(), all.end(), Weight(static_cast<std::size_t>(d) + 1, 0)) != all.end());
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}

TEST_CASE("reversal") {
  CHECK(reverse_weight(Weight{-1, 0, 1}) == Weight{-1, 0, 1});
  CHECK(reverse_weight(Weight{0, -1, 1}) == Weight{-1, 1, 0});
  CHECK(is_balanced(Weight{0, -1, 1}, 1));
  CHECK(is_balanced(Weight{-1, 1, 0}, 1));
  std::mt19937 rng(7);
  for (int k = 0; k < 300; ++k) {
    std::uniform_int_distribution<int> dd(1, 3), val(-4, 4);
    const int d = dd(rng);
    Weight n(static_cast<std::size_t>(d) + 1);
    for (auto& x : n) x = val(rng);
    CHECK(reverse_weight(reverse_weight(n)) == n);
    CHECK(bool(is_balanced(n, 2)) == bool(is_balanced(reverse_weight(n), 2)));
    CHECK(bool(is_balanced(n, 2)) == balanced_oracle(n, 2));
  }
}

TEST_CASE("tilde reduction and reduce_weight") {
  CHECK(tilde_reduction(Weight{0, 0, 0}, 1) == Weight{0, 0, 0});
  CHECK(tilde_reduction(Weight{-1, 1}, 1) == Weight{0, 0});
  CHECK(reduce_weight(Weight{-1, 1}, 1) == Weight{0});
  CHECK(reduce_weight(Weight{0, 0, 0}, 1) == Weight{0, 0});
  CHECK_THROWS_AS(tilde_reduction(Weight{1, -1}, 1), PreconditionError);
  for (int d = 1; d <= 4; ++d)
    for (int r = 1; r <= (d == 4 ? 1 : 3); ++r)
      for (const auto& n : enumerate_balanced(d, r)) {
        const auto t = tilde_reduction(n, r);
        CHECK(t[0] == 0);
        CHECK(balanced_oracle(t, r));
        const auto m = reduce_weight(n, r);
        REQUIRE(m.size() == n.size() - 1);
        CHECK(balanced_oracle(m, r));
        for (std::size_t i = 1; i < n.size(); ++i) {
          CHECK(n[i] - m[i - 1] >= 0);
          CHECK(n[i] - m[i - 1] <= r);
        }
      }
}
