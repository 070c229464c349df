#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

inline constexpr int kDefaultMaxD = 6;

/// Element of the Weyl group W = Sym{0,...,d}, stored in one-line notation:
/// images()[i] = w(i).
///
/// Products follow (a * b)(x) = a(b(x)) throughout the library, which is
/// the same as multiplying the corresponding permutation matrices
/// (M_w e_j = e_{w(j)}).
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int d);
  /// The adjacent transposition s_i = (i-1, i), 1 <= i <= d.
  static Permutation simple(int d, int i);
  /// Parses space separated images, e.g. "2 0 1".
  static Permutation parse(std::string_view text);

  int d() const { return static_cast<int>(images_.size()) - 1; }
  int operator()(int x) const { return images_[static_cast<std::size_t>(x)]; }
  const std::vector<int>& images() const { return images_; }

  Permutation inverse() const;
  int length() const;
  bool is_identity() const;
  std::string to_string() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// compose(a, b)(x) = a(b(x)). Throws SizeMismatchError if d differs.
Permutation compose(const Permutation& a, const Permutation& b);
Permutation inverse(const Permutation& w);
/// Number of inversions i < j with w(i) > w(j).
int length(const Permutation& w);

/// l(w s_i) > l(w), i.e. w(i-1) < w(i).
inline bool ascends(const Permutation& w, int i) { return w(i - 1) < w(i); }

/// ubar^power for ubar = s_d ... s_1, so ubar(0) = d and ubar(j) = j - 1.
Permutation ubar(int d, int power);

/// The exponent i in [0, d] with ubar^{-i} w fixing d; equals d - w(d).
int mu(const Permutation& w);

/// Letters i_1 ... i_k with w = s_{i_1} ... s_{i_k}.
using ReducedWord = std::vector<int>;

/// Canonical reduced word: repeatedly strip the smallest right descent.
ReducedWord reduced_word(const Permutation& w);
/// Same, stripping the largest right descent. Differs from reduced_word
/// whenever w has more than one reduced word starting from the right.
ReducedWord reduced_word_largest(const Permutation& w);
/// Every reduced word of w, sorted lexicographically.
std::vector<ReducedWord> all_reduced_words(const Permutation& w);
/// s_{i_1} ... s_{i_k} in Sym{0,...,d}; the letters need not be reduced.
Permutation word_product(int d, std::span<const int> letters);

/// All (d+1)! permutations in lexicographic order of images.
/// Throws ResourceBoundError if d > max_d.
std::vector<Permutation> enumerate_w(int d, int max_d = kDefaultMaxD);

/// Position of w in enumerate_w(w.d()).
std::size_t lex_rank(const Permutation& w);
Permutation lex_unrank(int d, std::size_t rank);

std::size_t factorial(int n);

/// Cached view of W for one d: elements in lexicographic order plus right
/// multiplication tables for s_i and ubar. Functions on W elsewhere in the
/// library are vectors indexed by these positions.
class WeylGroup {
 public:
  explicit WeylGroup(int d, int max_d = kDefaultMaxD);

  /// Shared instance; construction is serialized, reads are lock free.
  static const WeylGroup& get(int d);

  int d() const { return d_; }
  std::size_t size() const { return elements_.size(); }
  const Permutation& operator[](std::size_t idx) const { return elements_[idx]; }
  const std::vector<Permutation>& elements() const { return elements_; }
  std::size_t index_of(const Permutation& w) const;
  std::size_t identity_index() const { return 0; }

  /// Index of w s_i for w = (*this)[idx], 1 <= i <= d.
  std::size_t times_s(std::size_t idx, int i) const {
    return s_table_[idx * static_cast<std::size_t>(d_) + static_cast<std::size_t>(i - 1)];
  }
  /// Index of w ubar^power; any integer power.
  std::size_t times_ubar(std::size_t idx, int power) const;

  /// Elements of W^{s_d} = { w : l(w s_d) > l(w) } in index order.
  const std::vector<std::size_t>& sd_ascent_set() const { return sd_ascents_; }

 private:
  int d_;
  std::vector<Permutation> elements_;
  std::vector<std::size_t> s_table_;
  std::vector<std::size_t> ubar_table_;
  std::vector<std::size_t> sd_ascents_;
};

}  // namespace hecke
