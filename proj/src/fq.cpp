#include "hecke/fq.hpp"

#include <map>
#include <mutex>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int k = 2; k * k <= n; ++k)
    if (n % k == 0) return false;
  return true;
}

// Dense polynomials over F_p, index = degree.
using Poly = std::vector<int>;

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, int p) {
  trim(a);
  const int lead_inv = [&] {
    for (int x = 1; x < p; ++x)
      if ((x * m.back()) % p == 1) return x;
    return 1;
  }();
  while (a.size() >= m.size()) {
    const int coef = (a.back() * lead_inv) % p;
    const std::size_t shift = a.size() - m.size();
    for (std::size_t k = 0; k < m.size(); ++k) a[shift + k] = ((a[shift + k] - coef * m[k]) % p + p) % p;
    trim(a);
  }
  return a;
}

Poly monic_from_code(int code, int degree, int p) {
  Poly poly(static_cast<std::size_t>(degree) + 1, 0);
  for (int k = 0; k < degree; ++k) {
    poly[static_cast<std::size_t>(k)] = code % p;
    code /= p;
  }
  poly[static_cast<std::size_t>(degree)] = 1;
  return poly;
}

int ipow(int b, int e) {
  int out = 1;
  while (e-- > 0) out *= b;
  return out;
}

bool is_irreducible(const Poly& poly, int p) {
  const int degree = static_cast<int>(poly.size()) - 1;
  for (int k = 1; 2 * k <= degree; ++k) {
    for (int code = 0; code < ipow(p, k); ++code) {
      if (poly_mod(poly, monic_from_code(code, k, p), p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

std::pair<int, int> prime_power(int q) {
  if (q < 2) return {0, 0};
  int p = 2;
  while (q % p != 0) ++p;
  if (!is_prime(p)) return {0, 0};
  int f = 0;
  int rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++f;
  }
  if (rest != 1) return {0, 0};
  return {p, f};
}

FqFieldPtr FqField::get(int q) {
  auto [p, f] = prime_power(q);
  if (p == 0) throw DomainError("q = " + std::to_string(q) + " is not a prime power");
  if (q > kMaxQ) throw DomainError("q = " + std::to_string(q) + " exceeds the built-in field table (q <= 64)");
  static std::mutex mutex;
  static std::map<int, FqFieldPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[q];
  if (!slot) slot = std::make_shared<const FqField>(p, f);
  return slot;
}

FqField::FqField(int p, int f) : p_(p), f_(f), q_(ipow(p, f)) {
  for (int code = 0; code < q_; ++code) {
    auto candidate = monic_from_code(code, f, p);
    if (is_irreducible(candidate, p)) {
      modulus_.assign(candidate.begin(), candidate.end() - 1);
      break;
    }
  }

  log_table_.assign(static_cast<std::size_t>(q_), -1);
  for (std::uint32_t cand = 1; cand < static_cast<std::uint32_t>(q_); ++cand) {
    std::vector<std::uint32_t> powers;
    std::uint32_t x = from_int(1);
    bool primitive = true;
    for (int k = 0; k < q_ - 1; ++k) {
      if (k > 0 && x == from_int(1)) {
        primitive = false;
        break;
      }
      powers.push_back(x);
      x = poly_mul(x, cand);
    }
    if (primitive && x == from_int(1)) {
      generator_ = cand;
      exp_table_ = std::move(powers);
      break;
    }
  }
  for (std::size_t k = 0; k < exp_table_.size(); ++k) log_table_[exp_table_[k]] = static_cast<int>(k);
}

std::vector<int> FqField::coefficients(std::uint32_t a) const {
  std::vector<int> c(static_cast<std::size_t>(f_));
  for (int k = 0; k < f_; ++k) {
    c[static_cast<std::size_t>(k)] = static_cast<int>(a % static_cast<std::uint32_t>(p_));
    a /= static_cast<std::uint32_t>(p_);
  }
  return c;
}

std::uint32_t FqField::from_coefficients(const std::vector<int>& c) const {
  if (c.size() != static_cast<std::size_t>(f_)) throw ParseError("field element needs exactly f coefficients");
  std::uint32_t code = 0;
  for (int k = f_ - 1; k >= 0; --k) {
    const int v = ((c[static_cast<std::size_t>(k)] % p_) + p_) % p_;
    code = code * static_cast<std::uint32_t>(p_) + static_cast<std::uint32_t>(v);
  }
  return code;
}

std::uint32_t FqField::poly_mul(std::uint32_t a, std::uint32_t b) const {
  auto ca = coefficients(a);
  auto cb = coefficients(b);
  Poly prod(static_cast<std::size_t>(2 * f_), 0);
  for (int i = 0; i < f_; ++i)
    for (int j = 0; j < f_; ++j)
      prod[static_cast<std::size_t>(i + j)] =
          (prod[static_cast<std::size_t>(i + j)] + ca[static_cast<std::size_t>(i)] * cb[static_cast<std::size_t>(j)]) % p_;
  Poly m(modulus_.begin(), modulus_.end());
  m.push_back(1);
  auto rem = poly_mod(prod, m, p_);
  rem.resize(static_cast<std::size_t>(f_), 0);
  return from_coefficients(rem);
}

std::uint32_t FqField::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  const auto pu = static_cast<std::uint32_t>(p_);
  for (int k = 0; k < f_; ++k) {
    out += ((a % pu + b % pu) % pu) * place;
    a /= pu;
    b /= pu;
    place *= pu;
  }
  return out;
}

std::uint32_t FqField::neg(std::uint32_t a) const {
  std::uint32_t out = 0;
  std::uint32_t place = 1;
  const auto pu = static_cast<std::uint32_t>(p_);
  for (int k = 0; k < f_; ++k) {
    out += ((pu - a % pu) % pu) * place;
    a /= pu;
    place *= pu;
  }
  return out;
}

std::uint32_t FqField::sub(std::uint32_t a, std::uint32_t b) const { return add(a, neg(b)); }

std::uint32_t FqField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  const int k = (log_table_[a] + log_table_[b]) % (q_ - 1);
  return exp_table_[static_cast<std::size_t>(k)];
}

std::uint32_t FqField::inv(std::uint32_t a) const {
  if (a == 0) throw DomainError("inverse of zero in F_q");
  return exp(-log_table_[a]);
}

std::uint32_t FqField::exp(std::int64_t k) const {
  const std::int64_t n = q_ - 1;
  return exp_table_[static_cast<std::size_t>(((k % n) + n) % n)];
}

int FqField::log(std::uint32_t a) const {
  if (a == 0 || a >= static_cast<std::uint32_t>(q_)) throw DomainError("discrete log of zero");
  return log_table_[a];
}

std::uint32_t FqField::from_int(std::int64_t v) const {
  return static_cast<std::uint32_t>(((v % p_) + p_) % p_);
}

std::string FqElement::to_string() const {
  const auto c = coefficients();
  std::string out = "[";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(c[k]);
  }
  return out + "]";
}

}  // namespace hecke
