#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <queue>

#include "hecke/coxeter.hpp"
#include "hecke/errors.hpp"

using namespace hecke;

namespace {

// Word length by breadth-first search in the Cayley graph on right multiplication.
std::map<Permutation, int> bfs_lengths(int d) {
  std::map<Permutation, int> dist;
  std::queue<Permutation> todo;
  dist[Permutation::identity(d)] = 0;
  todo.push(Permutation::identity(d));
  while (!todo.empty()) {
    auto w = todo.front();
    todo.pop();
    for (int i = 1; i <= d; ++i) {
      auto next = w * Permutation::simple(d, i);
      if (!dist.count(next)) {
        dist[next] = dist[w] + 1;
        todo.push(next);
      }
    }
  }
  return dist;
}

}  // namespace

TEST_CASE("composition follows a(b(x))") {
  const auto w = Permutation::parse("2 0 1");
  CHECK(compose(Permutation::identity(2), w) == w);
  CHECK(compose(Permutation::simple(2, 1), Permutation::simple(2, 1)).is_identity());
  CHECK(compose(ubar(2, 1), Permutation::simple(2, 1)) == Permutation::parse("0 2 1"));
  CHECK(compose(ubar(2, 1), Permutation::simple(2, 1)) == Permutation::simple(2, 2));
  CHECK_THROWS_AS(compose(Permutation::identity(1), Permutation::identity(2)), SizeMismatchError);
  for (const auto& v : enumerate_w(3)) CHECK((inverse(v) * v).is_identity());
}

TEST_CASE("invalid images are rejected") {
  CHECK_THROWS_AS(Permutation({0, 0, 1}), DomainError);
  CHECK_THROWS_AS(Permutation::parse("0 x"), ParseError);
}

TEST_CASE("length agrees with shortest words") {
  for (int d = 1; d <= 4; ++d) {
    auto dist = bfs_lengths(d);
    CHECK(dist.size() == factorial(d + 1));
    for (const auto& [w, l] : dist) CHECK(length(w) == l);
  }
  CHECK(length(Permutation::identity(3)) == 0);
  CHECK(length(Permutation::parse("2 0 1")) == 2);
  CHECK(length(Permutation::parse("3 2 1 0")) == 6);
}

TEST_CASE("descent criterion") {
  for (int d = 1; d <= 4; ++d)
    for (const auto& w : enumerate_w(d))
      for (int i = 1; i <= d; ++i) {
        const int diff = length(w * Permutation::simple(d, i)) - length(w);
        CHECK(diff == (w(i - 1) < w(i) ? 1 : -1));
        CHECK(ascends(w, i) == (diff == 1));
      }
}

TEST_CASE("ubar and mu") {
  CHECK(ubar(2, 0).is_identity());
  CHECK(ubar(2, 1) == Permutation::parse("2 0 1"));
  CHECK(ubar(2, 1) == Permutation::simple(2, 2) * Permutation::simple(2, 1));
  for (int d = 1; d <= 5; ++d) {
    CHECK(ubar(d, d + 1).is_identity());
    CHECK(length(ubar(d, 1)) == d);
    CHECK(ubar(d, -1) == ubar(d, d));
    for (int i = 0; i <= d; ++i) CHECK(mu(ubar(d, i)) == i);
  }
  CHECK(mu(Permutation::simple(2, 2)) == 1);
  for (int d = 1; d <= 4; ++d)
    for (const auto& w : enumerate_w(d)) {
      const auto rest = ubar(d, -mu(w)) * w;
      CHECK(rest(d) == d);
      CHECK(ubar(d, mu(w)) * rest == w);
    }
}

TEST_CASE("reduced words") {
  CHECK(reduced_word(Permutation::identity(3)).empty());
  CHECK(reduced_word(Permutation::simple(3, 1)) == ReducedWord{1});
  CHECK(reduced_word(ubar(2, 1)) == ReducedWord{2, 1});
  for (int d = 1; d <= 4; ++d)
    for (const auto& w : enumerate_w(d)) {
      for (const auto& word : {reduced_word(w), reduced_word_largest(w)}) {
        CHECK(static_cast<int>(word.size()) == length(w));
        CHECK(word_product(d, word) == w);
      }
    }
  // the longest element of S_4 has 16 reduced words
  CHECK(all_reduced_words(Permutation::parse("3 2 1 0")).size() == 16);
  for (const auto& word : all_reduced_words(Permutation::parse("3 2 1 0")))
    CHECK(word_product(3, word) == Permutation::parse("3 2 1 0"));
}

TEST_CASE("enumeration") {
  CHECK(enumerate_w(1) == std::vector<Permutation>{Permutation::identity(1), Permutation::simple(1, 1)});
  CHECK(enumerate_w(2).size() == 6);
  auto w3 = enumerate_w(3);
  CHECK(w3.size() == 24);
  CHECK(w3.front().is_identity());
  CHECK(std::is_sorted(w3.begin(), w3.end()));
  CHECK_THROWS_AS(enumerate_w(7), ResourceBoundError);
  for (std::size_t k = 0; k < w3.size(); ++k) {
    CHECK(lex_rank(w3[k]) == k);
    CHECK(lex_unrank(3, k) == w3[k]);
  }
}

TEST_CASE("WeylGroup tables") {
  const auto& g = WeylGroup::get(3);
  for (std::size_t idx = 0; idx < g.size(); ++idx) {
    for (int i = 1; i <= 3; ++i) CHECK(g[g.times_s(idx, i)] == g[idx] * Permutation::simple(3, i));
    for (int k = -4; k <= 4; ++k) CHECK(g[g.times_ubar(idx, k)] == g[idx] * ubar(3, k));
  }
  for (std::size_t idx : g.sd_ascent_set()) CHECK(ascends(g[idx], 3));
  CHECK(g.sd_ascent_set().size() == 12);
}
