#include "hecke/coxeter.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.size() < 2)
    throw DomainError("permutation must act on {0,...,d} with d >= 1");
  std::vector<bool> seen(images_.size(), false);
  for (int x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= images_.size() || seen[static_cast<std::size_t>(x)])
      throw DomainError("images do not form a bijection of {0,...,d}");
    seen[static_cast<std::size_t>(x)] = true;
  }
}

Permutation Permutation::identity(int d) {
  if (d < 1) throw DomainError("d must be at least 1");
  std::vector<int> im(static_cast<std::size_t>(d) + 1);
  std::iota(im.begin(), im.end(), 0);
  return Permutation(std::move(im));
}

Permutation Permutation::simple(int d, int i) {
  if (i < 1 || i > d) throw DomainError("simple reflection index out of range");
  auto w = identity(d);
  std::swap(w.images_[static_cast<std::size_t>(i - 1)], w.images_[static_cast<std::size_t>(i)]);
  return w;
}

Permutation Permutation::parse(std::string_view text) {
  std::vector<int> im;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && text[pos] == ' ') ++pos;
    if (pos == text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc()) throw ParseError("bad permutation literal: '" + std::string(text) + "'");
    pos = static_cast<std::size_t>(ptr - text.data());
    im.push_back(value);
  }
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
  Permutation out;
  out.images_ = std::move(inv);
  return out;
}

int Permutation::length() const {
  int count = 0;
  for (std::size_t i = 0; i < images_.size(); ++i)
    for (std::size_t j = i + 1; j < images_.size(); ++j)
      if (images_[i] > images_[j]) ++count;
  return count;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i)) return false;
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(images_[i]);
  }
  return out;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.images_.size() != b.images_.size()) throw SizeMismatchError("composing permutations of different degree");
  Permutation out;
  out.images_.resize(a.images_.size());
  for (std::size_t x = 0; x < b.images_.size(); ++x)
    out.images_[x] = a.images_[static_cast<std::size_t>(b.images_[x])];
  return out;
}

Permutation compose(const Permutation& a, const Permutation& b) { return a * b; }
Permutation inverse(const Permutation& w) { return w.inverse(); }
int length(const Permutation& w) { return w.length(); }

Permutation ubar(int d, int power) {
  const int n = d + 1;
  int k = ((power % n) + n) % n;
  std::vector<int> im(static_cast<std::size_t>(n));
  // ubar(j) = j - 1 mod (d+1)
  for (int j = 0; j < n; ++j) im[static_cast<std::size_t>(j)] = ((j - k) % n + n) % n;
  return Permutation(std::move(im));
}

int mu(const Permutation& w) { return w.d() - w(w.d()); }

namespace {

ReducedWord strip_descents(Permutation w, bool smallest) {
  ReducedWord reversed;
  const int d = w.d();
  while (!w.is_identity()) {
    int pick = -1;
    for (int i = 1; i <= d; ++i) {
      if (!ascends(w, i)) {
        pick = i;
        if (smallest) break;
      }
    }
    reversed.push_back(pick);
    w = w * Permutation::simple(d, pick);
  }
  return {reversed.rbegin(), reversed.rend()};
}

void collect_words(const Permutation& w, ReducedWord& suffix, std::vector<ReducedWord>& out) {
  if (w.is_identity()) {
    out.emplace_back(suffix.rbegin(), suffix.rend());
    return;
  }
  for (int i = 1; i <= w.d(); ++i) {
    if (ascends(w, i)) continue;
    suffix.push_back(i);
    collect_words(w * Permutation::simple(w.d(), i), suffix, out);
    suffix.pop_back();
  }
}

}  // namespace

ReducedWord reduced_word(const Permutation& w) { return strip_descents(w, true); }
ReducedWord reduced_word_largest(const Permutation& w) { return strip_descents(w, false); }

std::vector<ReducedWord> all_reduced_words(const Permutation& w) {
  std::vector<ReducedWord> out;
  ReducedWord suffix;
  collect_words(w, suffix, out);
  std::sort(out.begin(), out.end());
  return out;
}

Permutation word_product(int d, std::span<const int> letters) {
  auto w = Permutation::identity(d);
  for (int i : letters) w = w * Permutation::simple(d, i);
  return w;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::size_t>(k);
  return f;
}

std::vector<Permutation> enumerate_w(int d, int max_d) {
  if (d < 1) throw DomainError("d must be at least 1");
  if (d > max_d) throw ResourceBoundError("enumerate_w: d = " + std::to_string(d) + " exceeds cap " + std::to_string(max_d));
  std::vector<int> im(static_cast<std::size_t>(d) + 1);
  std::iota(im.begin(), im.end(), 0);
  std::vector<Permutation> out;
  out.reserve(factorial(d + 1));
  do {
    out.emplace_back(im);
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

std::size_t lex_rank(const Permutation& w) {
  const int n = w.d() + 1;
  std::size_t rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (w(j) < w(i)) ++smaller;
    rank += static_cast<std::size_t>(smaller) * factorial(n - 1 - i);
  }
  return rank;
}

Permutation lex_unrank(int d, std::size_t rank) {
  const int n = d + 1;
  if (rank >= factorial(n)) throw DomainError("lex_unrank: rank out of range");
  std::vector<int> pool(static_cast<std::size_t>(n));
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<int> im;
  for (int i = 0; i < n; ++i) {
    std::size_t f = factorial(n - 1 - i);
    std::size_t k = rank / f;
    rank %= f;
    im.push_back(pool[k]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(k));
  }
  return Permutation(std::move(im));
}

WeylGroup::WeylGroup(int d, int max_d) : d_(d), elements_(enumerate_w(d, max_d)) {
  const std::size_t n = elements_.size();
  const auto du = static_cast<std::size_t>(d);
  s_table_.resize(n * du);
  ubar_table_.resize(n);
  const auto u = ubar(d, 1);
  for (std::size_t idx = 0; idx < n; ++idx) {
    const auto& w = elements_[idx];
    for (int i = 1; i <= d; ++i)
      s_table_[idx * du + static_cast<std::size_t>(i - 1)] = lex_rank(w * Permutation::simple(d, i));
    ubar_table_[idx] = lex_rank(w * u);
    if (ascends(w, d)) sd_ascents_.push_back(idx);
  }
}

const WeylGroup& WeylGroup::get(int d) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const WeylGroup>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[d];
  if (!slot) slot = std::make_unique<const WeylGroup>(d);
  return *slot;
}

std::size_t WeylGroup::index_of(const Permutation& w) const {
  if (w.d() != d_) throw SizeMismatchError("permutation degree does not match Weyl group");
  return lex_rank(w);
}

std::size_t WeylGroup::times_ubar(std::size_t idx, int power) const {
  const int n = d_ + 1;
  int k = ((power % n) + n) % n;
  for (int step = 0; step < k; ++step) idx = ubar_table_[idx];
  return idx;
}

}  // namespace hecke
