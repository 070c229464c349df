#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace hecke {

using Weight = std::vector<std::int64_t>;

/// An integer tuple (n_0, ..., n_d) together with its amplitude r.
struct BalancedWeight {
  Weight n;
  int r = 1;
  int d() const { return static_cast<int>(n.size()) - 1; }
};

/// Delta(I) = sum(I) - |I|(|I|-1)/2 for a finite I of nonnegative integers.
std::int64_t delta(std::span<const int> subset);
/// Same, for the subset of {0, ..., 31} encoded by a bitmask.
std::int64_t delta_mask(std::uint32_t mask);

std::vector<int> mask_to_subset(std::uint32_t mask, int size);

enum class BalanceFailure {
  NonzeroSum,  // sum of the entries is not zero
  Upper,       // sum over I exceeds r * Delta(I)
  Lower,       // sum over I is below -r * Delta(complement of I)
};

struct BalanceWitness {
  BalanceFailure side;
  std::vector<int> subset;
  std::int64_t sum;
  std::int64_t bound;
};

struct BalanceCheck {
  bool balanced = true;
  std::optional<BalanceWitness> witness;
  explicit operator bool() const { return balanced; }
};

/// Brute force over all 2^{d+1} subsets. Subsets are visited in increasing
/// bitmask order, upper side before lower side, so witnesses are stable.
BalanceCheck is_balanced(std::span<const std::int64_t> n, int r);

/// (-n_{d-i})_i. Balancedness is preserved in both directions.
Weight reverse_weight(std::span<const std::int64_t> n);

/// Balanced ntilde with ntilde_0 = 0 and 0 <= n_i - ntilde_i <= r for i >= 1,
/// built by the one-unit-at-a-time descent on t_i = n_i + r(d-i).
/// Throws PreconditionError on unbalanced input.
Weight tilde_reduction(std::span<const std::int64_t> n, int r);

/// Balanced m of length d with 0 <= n_i - m_{i-1} <= r, namely m_{i-1} = ntilde_i.
Weight reduce_weight(std::span<const std::int64_t> n, int r);

struct EnumerationLimits {
  int max_d = 4;
  int max_r = 3;
};

/// Every balanced weight of length d+1 and amplitude r, lexicographic.
/// Search box: -r(d-i) <= n_i <= r*i (the singleton constraints).
std::vector<Weight> enumerate_balanced(int d, int r, EnumerationLimits limits = {});

}  // namespace hecke
