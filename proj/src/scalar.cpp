#include "hecke/scalar.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

using IntPoly = std::vector<BigInt>;

// Exact division by a monic polynomial; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dd = den.size() - 1;
  if (num.size() < den.size()) throw InternalInvariantError("cyclotomic division: degree too small");
  IntPoly quot(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const BigInt c = num[k];
    quot[k - dd] = c;
    for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
  }
  for (const auto& c : num)
    if (c != 0) throw InternalInvariantError("cyclotomic division left a remainder");
  return quot;
}

IntPoly cyclotomic_poly(int n) {
  IntPoly poly(static_cast<std::size_t>(n) + 1, 0);
  poly[0] = -1;
  poly[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) poly = divide_exact(poly, cyclotomic_poly(d));
  return poly;
}

BigInt big_pow(int base, int e) {
  BigInt out = 1;
  for (int k = 0; k < e; ++k) out *= base;
  return out;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

bool CycInt::is_zero() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](const BigInt& c) { return c == 0; });
}

ScalarRingPtr ScalarRing::get(int q, int r) {
  static std::mutex mutex;
  static std::map<std::pair<int, int>, ScalarRingPtr> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{q, r}];
  if (!slot) slot = std::make_shared<const ScalarRing>(q, r);
  return slot;
}

ScalarRing::ScalarRing(int q, int r) : q_(q), r_(r) {
  if (r < 1) throw DomainError("amplitude r must be positive");
  field_ = FqField::get(q);
  p_ = field_->p();
  f_ = field_->f();
  cyclotomic_ = cyclotomic_poly(q - 1);

  const auto deg = static_cast<std::size_t>(degree());
  CycInt x = cyc_from_int(1);
  for (int k = 0; k < q - 1; ++k) {
    zeta_powers_.push_back(x);
    // x <- x * zeta, reducing the top coefficient with the monic modulus
    CycInt next;
    next.coeffs.assign(deg, 0);
    BigInt carry = x.coeffs[deg - 1];
    for (std::size_t j = deg; j-- > 1;) next.coeffs[j] = x.coeffs[j - 1];
    next.coeffs[0] = 0;
    for (std::size_t j = 0; j < deg; ++j) next.coeffs[j] -= carry * cyclotomic_[j];
    x = next;
  }
}

CycInt ScalarRing::cyc_zero() const {
  CycInt z;
  z.coeffs.assign(static_cast<std::size_t>(degree()), 0);
  return z;
}

CycInt ScalarRing::cyc_from_int(std::int64_t v) const {
  auto z = cyc_zero();
  z.coeffs[0] = v;
  normalize(z);
  return z;
}

CycInt ScalarRing::cyc_zeta(std::int64_t k) const {
  const std::int64_t n = q_ - 1;
  return zeta_powers_[static_cast<std::size_t>(((k % n) + n) % n)];
}

void ScalarRing::normalize(CycInt& a) const {
  if (a.is_zero()) {
    a.q_exp = 0;
    return;
  }
  while (a.q_exp > 0 &&
         std::all_of(a.coeffs.begin(), a.coeffs.end(), [&](const BigInt& c) { return c % q_ == 0; })) {
    for (auto& c : a.coeffs) c /= q_;
    --a.q_exp;
  }
}

CycInt ScalarRing::cyc_scale_q(const CycInt& a, int k) const {
  CycInt out = a;
  if (k >= 0) {
    // Cancel denominator first, then multiply the numerators.
    const int cancel = std::min(k, out.q_exp);
    out.q_exp -= cancel;
    const BigInt factor = big_pow(q_, k - cancel);
    for (auto& c : out.coeffs) c *= factor;
  } else {
    out.q_exp += -k;
  }
  normalize(out);
  return out;
}

CycInt ScalarRing::cyc_add(const CycInt& a, const CycInt& b) const {
  CycInt out = cyc_zero();
  const int e = std::max(a.q_exp, b.q_exp);
  const BigInt fa = big_pow(q_, e - a.q_exp);
  const BigInt fb = big_pow(q_, e - b.q_exp);
  for (std::size_t k = 0; k < out.coeffs.size(); ++k) out.coeffs[k] = a.coeffs[k] * fa + b.coeffs[k] * fb;
  out.q_exp = e;
  normalize(out);
  return out;
}

CycInt ScalarRing::cyc_neg(const CycInt& a) const {
  CycInt out = a;
  for (auto& c : out.coeffs) c = -c;
  return out;
}

CycInt ScalarRing::cyc_mul(const CycInt& a, const CycInt& b) const {
  const auto deg = static_cast<std::size_t>(degree());
  if (a.is_zero() || b.is_zero()) return cyc_zero();
  std::vector<BigInt> prod(2 * deg - 1, 0);
  for (std::size_t i = 0; i < deg; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (std::size_t j = 0; j < deg; ++j) prod[i + j] += a.coeffs[i] * b.coeffs[j];
  }
  for (std::size_t k = prod.size(); k-- > deg;) {
    const BigInt c = prod[k];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) prod[k - deg + j] -= c * cyclotomic_[j];
  }
  CycInt out;
  out.coeffs.assign(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(deg));
  out.q_exp = a.q_exp + b.q_exp;
  normalize(out);
  return out;
}

Scalar::Scalar(ScalarRingPtr ring) : ring_(std::move(ring)) {
  a_.assign(static_cast<std::size_t>(ring_->r()), ring_->cyc_zero());
}

Scalar Scalar::from_int(ScalarRingPtr ring, std::int64_t v) {
  Scalar s(ring);
  s.a_[0] = ring->cyc_from_int(v);
  return s;
}

Scalar Scalar::monomial(ScalarRingPtr ring, std::int64_t zeta_exp, std::int64_t pi_exp) {
  Scalar s(ring);
  const int r = ring->r();
  const std::int64_t qpow = floor_div(pi_exp, r);
  const auto degree = static_cast<std::size_t>(pi_exp - qpow * r);
  s.a_[degree] = ring->cyc_scale_q(ring->cyc_zeta(zeta_exp), static_cast<int>(qpow));
  return s;
}

Scalar Scalar::from_coefficients(ScalarRingPtr ring, std::vector<CycInt> coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(ring->r())) throw ParseError("scalar needs exactly r pi-coefficients");
  Scalar s(ring);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i].coeffs.size() != static_cast<std::size_t>(ring->degree()))
      throw ParseError("cyclotomic coefficient vector has the wrong length");
    ring->normalize(coeffs[i]);
    s.a_[i] = std::move(coeffs[i]);
  }
  return s;
}

bool Scalar::is_zero() const {
  return std::all_of(a_.begin(), a_.end(), [](const CycInt& c) { return c.is_zero(); });
}

bool Scalar::is_one() const { return *this == from_int(ring_, 1); }

void Scalar::check_ring(const Scalar& o) const {
  if (!ring_->same_parameters(*o.ring_)) throw ParameterMismatchError("scalars from different rings");
}

Scalar Scalar::operator+(const Scalar& o) const {
  check_ring(o);
  Scalar out(ring_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_->cyc_add(a_[i], o.a_[i]);
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out(ring_);
  for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = ring_->cyc_neg(a_[i]);
  return out;
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator*(const Scalar& o) const {
  check_ring(o);
  Scalar out(ring_);
  const std::size_t r = a_.size();
  for (std::size_t i = 0; i < r; ++i) {
    if (a_[i].is_zero()) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (o.a_[j].is_zero()) continue;
      auto term = ring_->cyc_mul(a_[i], o.a_[j]);
      std::size_t deg = i + j;
      if (deg >= r) {
        deg -= r;
        term = ring_->cyc_scale_q(term, 1);
      }
      out.a_[deg] = ring_->cyc_add(out.a_[deg], term);
    }
  }
  return out;
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_ring(b);
  return a.a_ == b.a_;
}

std::string Scalar::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < a_.size(); ++i) {
    if (a_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    out << "(";
    bool inner_first = true;
    for (std::size_t k = 0; k < a_[i].coeffs.size(); ++k) {
      if (a_[i].coeffs[k] == 0) continue;
      if (!inner_first) out << " + ";
      inner_first = false;
      out << a_[i].coeffs[k];
      if (k) out << "*z^" << k;
    }
    out << ")";
    if (a_[i].q_exp) out << "/q^" << a_[i].q_exp;
    if (i) out << "*pi^" << i;
  }
  if (first) out << "0";
  return out.str();
}

bool is_integral(const Scalar& a) {
  return std::all_of(a.coeffs().begin(), a.coeffs().end(), [](const CycInt& c) { return c.q_exp == 0; });
}

std::optional<std::int64_t> valuation_floor(const Scalar& a) {
  std::optional<std::int64_t> best;
  const int q = a.ring().q();
  const int r = a.ring().r();
  for (int i = 0; i < r; ++i) {
    const auto& c = a.coeff(i);
    if (c.is_zero()) continue;
    std::int64_t vq = -c.q_exp;
    if (c.q_exp == 0) {
      BigInt g = 0;
      for (const auto& x : c.coeffs) g = boost::multiprecision::gcd(g, x);
      if (g < 0) g = -g;
      while (g % q == 0) {
        g /= q;
        ++vq;
      }
    }
    const std::int64_t v = i + std::int64_t{r} * vq;
    if (!best || v < *best) best = v;
  }
  return best;
}

FqElement reduce_mod_pi(const Scalar& a) {
  if (!is_integral(a)) throw PreconditionError("reduce_mod_pi: scalar is not integral: " + a.to_string());
  const auto& field = a.ring().residue_field();
  FqElement out = FqElement::zero(field);
  const auto& c = a.coeff(0);
  for (std::size_t k = 0; k < c.coeffs.size(); ++k) {
    const auto residue = static_cast<std::int64_t>(c.coeffs[k] % field->p());
    out += FqElement::from_int(field, residue) * FqElement::generator_power(field, static_cast<std::int64_t>(k));
  }
  return out;
}

Scalar teichmuller(const FqElement& x, ScalarRingPtr ring) {
  if (x.is_zero()) throw DomainError("teichmuller: zero has no root-of-unity lift");
  if (x.field().q() != ring->q()) throw ParameterMismatchError("teichmuller: field and ring disagree on q");
  return Scalar::monomial(std::move(ring), x.log(), 0);
}

}  // namespace hecke
