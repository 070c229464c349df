#include "hecke/weights.hpp"

#include <numeric>
#include <string>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

constexpr int kMaxSubsetBits = 24;

std::int64_t choose2(std::int64_t k) { return k * (k - 1) / 2; }

void require_length(std::span<const std::int64_t> n) {
  if (n.size() < 2) throw DomainError("weight must have length d+1 >= 2");
  if (n.size() > kMaxSubsetBits) throw ResourceBoundError("weight length exceeds the 24-bit subset cap");
}

}  // namespace

std::int64_t delta(std::span<const int> subset) {
  std::int64_t sum = 0;
  for (int i : subset) sum += i;
  return sum - choose2(static_cast<std::int64_t>(subset.size()));
}

std::int64_t delta_mask(std::uint32_t mask) {
  std::int64_t sum = 0;
  std::int64_t count = 0;
  for (int i = 0; i < 32; ++i) {
    if (mask & (1u << i)) {
      sum += i;
      ++count;
    }
  }
  return sum - choose2(count);
}

std::vector<int> mask_to_subset(std::uint32_t mask, int size) {
  std::vector<int> out;
  for (int i = 0; i < size; ++i)
    if (mask & (1u << i)) out.push_back(i);
  return out;
}

BalanceCheck is_balanced(std::span<const std::int64_t> n, int r) {
  require_length(n);
  if (r < 1) throw DomainError("amplitude r must be positive");
  const int size = static_cast<int>(n.size());
  const std::uint32_t full = (1u << size) - 1;

  const std::int64_t total = std::accumulate(n.begin(), n.end(), std::int64_t{0});
  if (total != 0) {
    return {false, BalanceWitness{BalanceFailure::NonzeroSum, mask_to_subset(full, size), total, 0}};
  }
  for (std::uint32_t mask = 0; mask <= full; ++mask) {
    std::int64_t sum = 0;
    for (int i = 0; i < size; ++i)
      if (mask & (1u << i)) sum += n[static_cast<std::size_t>(i)];
    const std::int64_t upper = r * delta_mask(mask);
    if (sum > upper) return {false, BalanceWitness{BalanceFailure::Upper, mask_to_subset(mask, size), sum, upper}};
    const std::int64_t lower = -r * delta_mask(full & ~mask);
    if (sum < lower) return {false, BalanceWitness{BalanceFailure::Lower, mask_to_subset(mask, size), sum, lower}};
  }
  return {};
}

Weight reverse_weight(std::span<const std::int64_t> n) {
  Weight out(n.size());
  const std::size_t d = n.size() - 1;
  for (std::size_t i = 0; i < n.size(); ++i) out[i] = -n[d - i];
  return out;
}

Weight tilde_reduction(std::span<const std::int64_t> n, int r) {
  if (!is_balanced(n, r)) throw PreconditionError("tilde_reduction: input weight is not balanced");
  const int d = static_cast<int>(n.size()) - 1;
  const auto du = static_cast<std::size_t>(d);

  // Positions 1..d live at slots 0..d-1 of t and s.
  std::vector<std::int64_t> t(du);
  for (int i = 1; i <= d; ++i) t[static_cast<std::size_t>(i - 1)] = n[static_cast<std::size_t>(i)] + std::int64_t{r} * (d - i);
  std::vector<std::int64_t> s = t;

  const std::int64_t steps = std::accumulate(t.begin(), t.end(), std::int64_t{0}) - r * choose2(d);
  if (steps < 0) throw InternalInvariantError("tilde_reduction: negative step count");

  const std::uint32_t full = (1u << d) - 1;
  auto is_tight = [&](std::uint32_t mask) {
    std::int64_t sum = 0;
    std::int64_t count = 0;
    for (int b = 0; b < d; ++b) {
      if (mask & (1u << b)) {
        sum += s[static_cast<std::size_t>(b)];
        ++count;
      }
    }
    return sum == r * choose2(count);
  };

  for (std::int64_t m = 0; m < steps; ++m) {
    // Tight sets are closed under union, so their union is the unique
    // inclusion-maximal tight set.
    std::uint32_t maximal = 0;
    for (std::uint32_t mask = 0; mask <= full; ++mask)
      if (is_tight(mask)) maximal |= mask;
    if (!is_tight(maximal))
      throw InternalInvariantError("tilde_reduction: union of tight subsets is not tight");

    int pick = -1;
    for (int b = 0; b < d; ++b) {
      if (maximal & (1u << b)) continue;
      if (s[static_cast<std::size_t>(b)] + r > t[static_cast<std::size_t>(b)]) {
        pick = b;
        break;
      }
    }
    if (pick < 0) throw InternalInvariantError("tilde_reduction: no admissible index to decrement");
    --s[static_cast<std::size_t>(pick)];
  }

  Weight out(n.size(), 0);
  for (int i = 1; i <= d; ++i) out[static_cast<std::size_t>(i)] = s[static_cast<std::size_t>(i - 1)] - std::int64_t{r} * (d - i);
  return out;
}

Weight reduce_weight(std::span<const std::int64_t> n, int r) {
  const auto tilde = tilde_reduction(n, r);
  return Weight(tilde.begin() + 1, tilde.end());
}

namespace {

void enumerate_rec(int d, int r, std::size_t pos, std::int64_t partial, Weight& current, std::vector<Weight>& out) {
  const int i = static_cast<int>(pos);
  if (i == d) {
    const std::int64_t last = -partial;
    if (last < -std::int64_t{r} * (d - i) || last > std::int64_t{r} * i) return;
    current[pos] = last;
    if (is_balanced(current, r)) out.push_back(current);
    return;
  }
  for (std::int64_t v = -std::int64_t{r} * (d - i); v <= std::int64_t{r} * i; ++v) {
    current[pos] = v;
    enumerate_rec(d, r, pos + 1, partial + v, current, out);
  }
}

}  // namespace

std::vector<Weight> enumerate_balanced(int d, int r, EnumerationLimits limits) {
  if (d < 1 || r < 1) throw DomainError("enumerate_balanced: need d >= 1 and r >= 1");
  if (d > limits.max_d || r > limits.max_r)
    throw ResourceBoundError("enumerate_balanced: (d, r) = (" + std::to_string(d) + ", " + std::to_string(r) +
                             ") exceeds the configured bound");
  std::vector<Weight> out;
  Weight current(static_cast<std::size_t>(d) + 1, 0);
  enumerate_rec(d, r, 0, 0, current, out);
  return out;
}

}  // namespace hecke
