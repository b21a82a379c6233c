#include "sidem/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace sidem {

namespace {

// Dense polynomials over Q, ascending degree, no trailing zeros.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

// Division with remainder; the divisor need not be monic.
std::pair<Poly, Poly> poly_divmod(Poly num, const Poly& den) {
  if (den.empty()) throw std::domain_error("polynomial division by zero");
  Poly quot(num.size() > den.size() - 1 ? num.size() - den.size() + 1 : 0, Rational(0));
  const Rational lead_inv = den.back().inverse();
  while (num.size() >= den.size()) {
    const Rational c = num.back() * lead_inv;
    const std::size_t shift = num.size() - den.size();
    quot[shift] = c;
    for (std::size_t i = 0; i < den.size(); ++i) num[shift + i] -= c * den[i];
    trim(num);
  }
  trim(quot);
  return {quot, num};
}

Poly poly_mod(Poly num, const Poly& den) { return poly_divmod(std::move(num), den).second; }

// Extended Euclid: returns (g, s) with s * a = g (mod b) and g the gcd.
std::pair<Poly, Poly> poly_half_ext_gcd(Poly a, Poly b) {
  Poly s0{Rational(1)}, s1{};
  while (!b.empty()) {
    auto [q, r] = poly_divmod(a, b);
    a = std::move(b);
    b = std::move(r);
    Poly s2 = s0;
    const Poly qs1 = poly_mul(q, s1);
    s2.resize(std::max(s2.size(), qs1.size()), Rational(0));
    for (std::size_t i = 0; i < qs1.size(); ++i) s2[i] -= qs1[i];
    trim(s2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  return {a, s0};
}

Poly phi_as_poly(std::uint32_t n) {
  Poly out;
  for (long long c : cyclotomic_polynomial(n)) out.push_back(Rational(c));
  return out;
}

}  // namespace

std::vector<long long> cyclotomic_polynomial(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_polynomial: n must be positive");
  static std::map<std::uint32_t, std::vector<long long>> cache;
  if (auto it = cache.find(n); it != cache.end()) return it->second;

  // x^n - 1 divided exactly by the product of Phi_d over proper divisors d.
  std::vector<long long> num(n + 1, 0);
  num[0] = -1;
  num[n] = 1;
  for (std::uint32_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const std::vector<long long> phi_d = cyclotomic_polynomial(d);
    // synthetic division by a monic divisor, in place, exact
    std::vector<long long> quot(num.size() - phi_d.size() + 1, 0);
    for (std::size_t shift = quot.size(); shift-- > 0;) {
      const long long c = num[shift + phi_d.size() - 1];
      if (c == 0) continue;
      quot[shift] = c;
      for (std::size_t j = 0; j < phi_d.size(); ++j) num[shift + j] -= c * phi_d[j];
    }
    for (long long rem : num) {
      if (rem != 0) throw std::logic_error("cyclotomic_polynomial: division was not exact");
    }
    num = std::move(quot);
  }
  cache[n] = num;
  return num;
}

CycloNumber::CycloNumber(std::uint32_t order, std::vector<Rational> coeffs)
    : order_(order), coeffs_(std::move(coeffs)) {}

CycloNumber CycloNumber::zero(std::uint32_t order) {
  const std::size_t deg = cyclotomic_polynomial(order).size() - 1;
  return CycloNumber(order, std::vector<Rational>(deg, Rational(0)));
}

CycloNumber CycloNumber::one(std::uint32_t order) {
  return from_rational(order, Rational(1));
}

CycloNumber CycloNumber::from_rational(std::uint32_t order, const Rational& r) {
  CycloNumber out = zero(order);
  if (out.coeffs_.empty()) {
    // deg Phi_1 = 1: the field is Q itself and the basis is empty only
    // when order is 1 or 2 with deg 1 -- keep one slot in that case.
    throw std::logic_error("CycloNumber: cyclotomic degree must be positive");
  }
  out.coeffs_[0] = r;
  return out;
}

CycloNumber CycloNumber::zeta(std::uint32_t order) { return zeta_pow(order, 1); }

CycloNumber CycloNumber::zeta_pow(std::uint32_t order, std::int64_t e) {
  const std::int64_t n = static_cast<std::int64_t>(order);
  std::int64_t r = e % n;
  if (r < 0) r += n;
  Poly x(static_cast<std::size_t>(r) + 1, Rational(0));
  x.back() = Rational(1);
  Poly reduced = poly_mod(std::move(x), phi_as_poly(order));
  CycloNumber out = zero(order);
  for (std::size_t i = 0; i < reduced.size(); ++i) out.coeffs_[i] = reduced[i];
  return out;
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
  if (order_ != o.order_) throw std::invalid_argument("CycloNumber: order mismatch");
  CycloNumber out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += o.coeffs_[i];
  return out;
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const {
  if (order_ != o.order_) throw std::invalid_argument("CycloNumber: order mismatch");
  CycloNumber out = *this;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] -= o.coeffs_[i];
  return out;
}

CycloNumber CycloNumber::operator-() const {
  CycloNumber out = *this;
  for (Rational& c : out.coeffs_) c = -c;
  return out;
}

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
  if (order_ != o.order_) throw std::invalid_argument("CycloNumber: order mismatch");
  Poly a(coeffs_.begin(), coeffs_.end());
  Poly b(o.coeffs_.begin(), o.coeffs_.end());
  trim(a);
  trim(b);
  Poly prod = poly_mod(poly_mul(a, b), phi_as_poly(order_));
  CycloNumber out = zero(order_);
  for (std::size_t i = 0; i < prod.size(); ++i) out.coeffs_[i] = prod[i];
  return out;
}

CycloNumber CycloNumber::inverse() const {
  if (is_zero()) throw std::domain_error("CycloNumber: zero has no inverse");
  Poly a(coeffs_.begin(), coeffs_.end());
  trim(a);
  auto [g, s] = poly_half_ext_gcd(a, phi_as_poly(order_));
  if (g.size() != 1) {
    throw std::logic_error("CycloNumber: gcd with the cyclotomic polynomial is not constant");
  }
  const Rational scale = g[0].inverse();
  Poly inv = poly_mod(std::move(s), phi_as_poly(order_));
  CycloNumber out = zero(order_);
  for (std::size_t i = 0; i < inv.size(); ++i) out.coeffs_[i] = inv[i] * scale;
  return out;
}

bool CycloNumber::operator==(const CycloNumber& o) const {
  return order_ == o.order_ && coeffs_ == o.coeffs_;
}

bool CycloNumber::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool CycloNumber::is_one() const {
  if (coeffs_.empty() || !coeffs_[0].is_one()) return false;
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

bool CycloNumber::is_rational() const {
  return std::all_of(coeffs_.begin() + 1, coeffs_.end(),
                     [](const Rational& c) { return c.is_zero(); });
}

Rational CycloNumber::as_rational() const {
  if (!is_rational()) throw std::domain_error("CycloNumber: value is irrational");
  return coeffs_[0];
}

std::string CycloNumber::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    if (!first) out << " + ";
    first = false;
    if (i == 0) {
      out << coeffs_[i].to_string();
    } else {
      out << coeffs_[i].to_string() << "*ζ";
      if (i > 1) out << "^" << i;
    }
  }
  return out.str();
}

}  // namespace sidem
