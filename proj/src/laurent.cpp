#include "hecke/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "hecke/errors.hpp"

namespace hecke {

namespace {

std::int64_t sat_add(std::int64_t a, std::int64_t b) {
  if (a == Laurent::kExact || b == Laurent::kExact) return Laurent::kExact;
  return a + b;
}

}  // namespace

Laurent Laurent::monomial(FqFieldPtr field, std::uint32_t c, std::int64_t e) {
  Laurent out(std::move(field));
  if (c != 0) {
    out.lo_ = e;
    out.c_ = {c};
  }
  return out;
}

Laurent Laurent::from_coefficients(FqFieldPtr field, std::int64_t lo, const std::vector<std::uint32_t>& coeffs,
                                   std::int64_t precision) {
  Laurent out(std::move(field));
  out.lo_ = lo;
  out.c_ = coeffs;
  out.prec_ = precision;
  out.normalize();
  return out;
}

void Laurent::normalize() {
  if (prec_ != kExact && !c_.empty()) {
    const std::int64_t keep = std::max<std::int64_t>(0, prec_ - lo_);
    if (static_cast<std::int64_t>(c_.size()) > keep) c_.resize(static_cast<std::size_t>(keep));
  }
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
  std::size_t lead = 0;
  while (lead < c_.size() && c_[lead] == 0) ++lead;
  if (lead == c_.size()) {
    c_.clear();
    lo_ = 0;
    return;
  }
  c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
  lo_ += static_cast<std::int64_t>(lead);
}

std::uint32_t Laurent::coeff(std::int64_t e) const {
  if (e >= prec_) throw PrecisionError("coefficient beyond the known precision");
  if (c_.empty() || e < lo_ || e >= lo_ + static_cast<std::int64_t>(c_.size())) return 0;
  return c_[static_cast<std::size_t>(e - lo_)];
}

Laurent Laurent::operator+(const Laurent& o) const {
  Laurent out(field_);
  out.prec_ = std::min(prec_, o.prec_);
  if (c_.empty() && o.c_.empty()) return out;
  const std::int64_t lo = c_.empty() ? o.lo_ : (o.c_.empty() ? lo_ : std::min(lo_, o.lo_));
  const std::int64_t hi = std::max(c_.empty() ? lo : lo_ + static_cast<std::int64_t>(c_.size()),
                                   o.c_.empty() ? lo : o.lo_ + static_cast<std::int64_t>(o.c_.size()));
  out.lo_ = lo;
  out.c_.assign(static_cast<std::size_t>(hi - lo), 0);
  for (std::size_t k = 0; k < c_.size(); ++k) out.c_[static_cast<std::size_t>(lo_ - lo) + k] = c_[k];
  for (std::size_t k = 0; k < o.c_.size(); ++k) {
    auto& slot = out.c_[static_cast<std::size_t>(o.lo_ - lo) + k];
    slot = field_->add(slot, o.c_[k]);
  }
  out.normalize();
  return out;
}

Laurent Laurent::operator-() const {
  Laurent out = *this;
  for (auto& c : out.c_) c = field_->neg(c);
  return out;
}

Laurent Laurent::operator-(const Laurent& o) const { return *this + (-o); }

Laurent Laurent::operator*(const Laurent& o) const {
  Laurent out(field_);
  if (is_exact_zero() || o.is_exact_zero()) return out;
  out.prec_ = std::min(sat_add(prec_, o.valuation()), sat_add(o.prec_, valuation()));
  if (c_.empty() || o.c_.empty()) return out;
  out.lo_ = lo_ + o.lo_;
  out.c_.assign(c_.size() + o.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j)
      out.c_[i + j] = field_->add(out.c_[i + j], field_->mul(c_[i], o.c_[j]));
  }
  out.normalize();
  return out;
}

Laurent Laurent::inverse(std::int64_t rel_precision) const {
  if (c_.empty()) {
    if (is_exact()) throw DomainError("inverse of zero Laurent series");
    throw PrecisionError("inverse of a series whose valuation is not known");
  }
  const std::int64_t v = lo_;
  if (is_exact() && c_.size() == 1) return monomial(field_, field_->inv(c_[0]), -v);
  const std::int64_t rel = is_exact() ? rel_precision : std::min(rel_precision, prec_ - v);
  const auto n = static_cast<std::size_t>(std::max<std::int64_t>(rel, 1));
  std::vector<std::uint32_t> b(n, 0);
  const std::uint32_t b0 = field_->inv(c_[0]);
  b[0] = b0;
  for (std::size_t k = 1; k < n; ++k) {
    std::uint32_t acc = 0;
    for (std::size_t j = 1; j <= k && j < c_.size(); ++j) acc = field_->add(acc, field_->mul(c_[j], b[k - j]));
    b[k] = field_->neg(field_->mul(b0, acc));
  }
  return from_coefficients(field_, -v, b, -v + static_cast<std::int64_t>(n));
}

std::string Laurent::to_string() const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k] == 0) continue;
    if (!first) out << " + ";
    first = false;
    out << FqElement(field_, c_[k]).to_string() << "*X^" << lo_ + static_cast<std::int64_t>(k);
  }
  if (first) out << "0";
  if (!is_exact()) out << " + O(X^" << prec_ << ")";
  return out.str();
}

}  // namespace hecke
