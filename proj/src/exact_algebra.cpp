#include "sidem/exact_algebra.hpp"

#include "sidem/numtheory.hpp"

#include <numeric>

namespace sidem {

AbGroup AbGroup::cyclic(std::uint32_t n) {
  if (n == 0) throw std::invalid_argument("AbGroup: order must be positive");
  return AbGroup(Kind::Cyclic, 1, n);
}

AbGroup AbGroup::product(std::uint32_t m, std::uint32_t n) {
  if (m == 0 || n == 0) throw std::invalid_argument("AbGroup: orders must be positive");
  return AbGroup(Kind::Product, m, n);
}

std::uint32_t AbGroup::size() const { return m_ * n_; }

std::uint32_t AbGroup::exponent() const {
  return static_cast<std::uint32_t>(std::lcm<std::uint64_t>(m_, n_));
}

std::uint32_t AbGroup::add(std::uint32_t i, std::uint32_t j) const {
  if (kind_ == Kind::Cyclic) return (i + j) % n_;
  const std::uint32_t ki = i / n_, ji = i % n_;
  const std::uint32_t kj = j / n_, jj = j % n_;
  return ((ki + kj) % m_) * n_ + (ji + jj) % n_;
}

std::uint32_t AbGroup::inverse(std::uint32_t i) const {
  if (kind_ == Kind::Cyclic) return (n_ - i % n_) % n_;
  const std::uint32_t k = i / n_, j = i % n_;
  return ((m_ - k) % m_) * n_ + (n_ - j) % n_;
}

std::uint32_t AbGroup::character_exponent(std::uint32_t chi, std::uint32_t elem) const {
  const std::uint64_t N = exponent();
  if (kind_ == Kind::Cyclic) {
    return static_cast<std::uint32_t>((static_cast<std::uint64_t>(chi) * elem) % n_ * (N / n_) %
                                      N);
  }
  const std::uint64_t a = chi / n_, b = chi % n_;
  const std::uint64_t k = elem / n_, j = elem % n_;
  return static_cast<std::uint32_t>(((N / m_) * (a * k % m_) + (N / n_) * (b * j % n_)) % N);
}

std::string AbGroup::element_name(std::uint32_t i) const {
  if (kind_ == Kind::Cyclic) {
    if (i == 0) return "1";
    if (i == 1) return "g";
    return "g^" + std::to_string(i);
  }
  const std::uint32_t k = i / n_, j = i % n_;
  if (k == 0 && j == 0) return "1";
  std::string out;
  if (k == 1) out += "a";
  if (k > 1) out += "a^" + std::to_string(k);
  if (j >= 1 && !out.empty()) out += "*";
  if (j == 1) out += "b";
  if (j > 1) out += "b^" + std::to_string(j);
  return out;
}

std::string AbGroup::describe() const {
  if (kind_ == Kind::Cyclic) return "cyclic:" + std::to_string(n_);
  return "product:" + std::to_string(m_) + "x" + std::to_string(n_);
}

PrimeFieldElem::PrimeFieldElem(std::uint64_t q, std::int64_t value) : q_(q) {
  if (q < 2 || !is_prime(q)) {
    throw std::invalid_argument("PrimeFieldElem: field order must be prime");
  }
  std::int64_t r = value % static_cast<std::int64_t>(q);
  if (r < 0) r += static_cast<std::int64_t>(q);
  v_ = static_cast<std::uint64_t>(r);
}

namespace {

std::uint64_t require_same_field(const PrimeFieldElem& a, const PrimeFieldElem& b) {
  if (a.field_order() != b.field_order()) {
    throw std::invalid_argument("PrimeFieldElem: field mismatch");
  }
  return a.field_order();
}

}  // namespace

PrimeFieldElem PrimeFieldElem::operator+(const PrimeFieldElem& o) const {
  const std::uint64_t q = require_same_field(*this, o);
  return PrimeFieldElem(q, static_cast<std::int64_t>((v_ + o.v_) % q));
}

PrimeFieldElem PrimeFieldElem::operator-(const PrimeFieldElem& o) const {
  const std::uint64_t q = require_same_field(*this, o);
  return PrimeFieldElem(q, static_cast<std::int64_t>((v_ + q - o.v_) % q));
}

PrimeFieldElem PrimeFieldElem::operator*(const PrimeFieldElem& o) const {
  const std::uint64_t q = require_same_field(*this, o);
  return PrimeFieldElem(q, static_cast<std::int64_t>(
                               (static_cast<__uint128_t>(v_) * o.v_) % q));
}

PrimeFieldElem PrimeFieldElem::operator-() const {
  return PrimeFieldElem(q_, static_cast<std::int64_t>((q_ - v_) % q_));
}

PrimeFieldElem PrimeFieldElem::inverse() const {
  if (is_zero()) throw std::domain_error("PrimeFieldElem: zero has no inverse");
  return PrimeFieldElem(q_, static_cast<std::int64_t>(mod_pow(v_, q_ - 2, q_)));
}

std::vector<CycloElement> primitive_idempotents(const AbGroup& group) {
  const std::uint32_t N = group.exponent();
  const std::uint32_t size = group.size();
  const CycloNumber inv_size =
      CycloNumber::from_rational(N, Rational(1, static_cast<long>(size)));
  // zeta_N^e for every exponent, computed once
  std::vector<CycloNumber> zeta_pows;
  zeta_pows.reserve(N);
  for (std::uint32_t e = 0; e < N; ++e) zeta_pows.push_back(CycloNumber::zeta_pow(N, e));

  std::vector<CycloElement> out;
  out.reserve(size);
  for (std::uint32_t chi = 0; chi < size; ++chi) {
    CycloElement e(group);
    for (std::uint32_t g = 0; g < size; ++g) {
      e.set(g, zeta_pows[group.character_exponent(chi, group.inverse(g))] * inv_size);
    }
    out.push_back(std::move(e));
  }
  return out;
}

CycloElement idempotent_from_mask(const AbGroup& group, std::uint64_t mask) {
  if (group.size() > 63) throw std::invalid_argument("idempotent_from_mask: group too large");
  if (mask >= (std::uint64_t{1} << group.size())) {
    throw std::invalid_argument("idempotent_from_mask: mask has bits outside the group");
  }
  const std::vector<CycloElement> prim = primitive_idempotents(group);
  CycloElement out(group);
  for (std::uint32_t j = 0; j < group.size(); ++j) {
    if ((mask >> j) & 1) out = out.add(prim[j]);
  }
  return out;
}

std::vector<CycloNumber> character_coordinates(const CycloElement& a) {
  const AbGroup& group = a.group();
  const std::uint32_t N = group.exponent();
  std::vector<CycloNumber> out;
  out.reserve(group.size());
  for (std::uint32_t chi = 0; chi < group.size(); ++chi) {
    CycloNumber v = CycloNumber::zero(N);
    for (const auto& [g, c] : a.coeffs()) {
      v = v + c * CycloNumber::zeta_pow(N, group.character_exponent(chi, g));
    }
    out.push_back(std::move(v));
  }
  return out;
}

CycloElement from_character_coordinates(const AbGroup& group,
                                        const std::vector<CycloNumber>& coords) {
  if (coords.size() != group.size()) {
    throw std::invalid_argument("from_character_coordinates: wrong coordinate count");
  }
  const std::uint32_t N = group.exponent();
  const CycloNumber inv_size =
      CycloNumber::from_rational(N, Rational(1, static_cast<long>(group.size())));
  CycloElement out(group);
  for (std::uint32_t g = 0; g < group.size(); ++g) {
    CycloNumber v = CycloNumber::zero(N);
    for (std::uint32_t chi = 0; chi < group.size(); ++chi) {
      if (coords[chi].is_zero()) continue;
      v = v + coords[chi] *
                  CycloNumber::zeta_pow(N, group.character_exponent(chi, group.inverse(g)));
    }
    out.set(g, v * inv_size);
  }
  return out;
}

std::uint64_t character_mask(const CycloElement& a) {
  if (a.group().size() > 63) throw std::invalid_argument("character_mask: group too large");
  const std::vector<CycloNumber> coords = character_coordinates(a);
  std::uint64_t mask = 0;
  for (std::uint32_t j = 0; j < coords.size(); ++j) {
    if (coords[j].is_one()) {
      mask |= std::uint64_t{1} << j;
    } else if (!coords[j].is_zero()) {
      throw std::invalid_argument("character_mask: element is not idempotent");
    }
  }
  return mask;
}

std::vector<CycloElement> co_idempotents(const CycloElement& alpha) {
  if (alpha.is_zero()) throw std::invalid_argument("co_idempotents: alpha must be nonzero");
  const AbGroup& group = alpha.group();
  const std::uint32_t N = group.exponent();
  const std::uint64_t mask = character_mask(alpha);  // throws if not idempotent
  std::vector<std::uint32_t> on_bits;
  for (std::uint32_t j = 0; j < group.size(); ++j) {
    if ((mask >> j) & 1) on_bits.push_back(j);
  }
  if (on_bits.size() > 20) {
    throw std::invalid_argument("co_idempotents: 2^" + std::to_string(on_bits.size()) +
                                " sign choices exceed the cap 2^20");
  }
  // In character coordinates the conditions read b_j^2 = a_j and
  // a_j b_j = b_j pointwise, so b_j is a sign on the mask and 0 elsewhere.
  std::vector<CycloElement> out;
  const CycloNumber plus = CycloNumber::one(N);
  const CycloNumber minus = -plus;
  for (std::uint64_t signs = 1; signs < (std::uint64_t{1} << on_bits.size()); ++signs) {
    std::vector<CycloNumber> coords(group.size(), CycloNumber::zero(N));
    for (std::size_t b = 0; b < on_bits.size(); ++b) {
      coords[on_bits[b]] = ((signs >> b) & 1) ? minus : plus;
    }
    out.push_back(from_character_coordinates(group, coords));
  }
  return out;  // sign pattern 0 (all plus) is alpha itself, excluded
}

std::string SubgroupPairReport::failed_requirements() const {
  std::string out;
  auto append = [&out](const char* what) {
    if (!out.empty()) out += "; ";
    out += what;
  };
  if (!alpha_nontrivial_idempotent) append("alpha is not a nontrivial idempotent");
  if (!beta_squares_to_alpha) append("beta^2 != alpha");
  if (!absorption_holds) append("alpha*beta != beta");
  if (!beta_excluded) append("beta is not outside {0, 1, alpha}");
  return out;
}

namespace {

// Shared across the rational and prime-field entry points; `embed` maps a
// small integer into the coefficient field.
template <class K, class Embed>
SubgroupPair<K> subgroup_pair_impl(const AbGroup& group, std::uint64_t p, int case_id,
                                   Embed embed) {
  const std::uint32_t n = group.size();
  if (!is_prime(p)) throw std::invalid_argument("subgroup pair: p must be prime");
  if (n % p != 0) throw std::invalid_argument("subgroup pair: p must divide the group order");
  const K pk = embed(static_cast<std::int64_t>(p));
  if (pk.is_zero()) {
    throw std::invalid_argument("subgroup pair: p is not a unit in the coefficient field");
  }
  const K one = embed(1);
  const K p2 = pk * pk;
  const K p4 = p2 * p2;
  switch (case_id) {
    case 1:
      if (!(p4 == one)) throw std::invalid_argument("subgroup pair case 1 needs p^4 = 1");
      break;
    case 2:
      if (!(p2 == one)) throw std::invalid_argument("subgroup pair case 2 needs p^2 = 1");
      break;
    case 3:
      if (p != 2) throw std::invalid_argument("subgroup pair case 3 needs p = 2");
      break;
    default:
      throw std::invalid_argument("subgroup pair: case must be 1, 2 or 3");
  }

  // H: the unique subgroup of order p in cyclic(n).
  AlgElement<K> subgroup_sum(group);
  const std::uint32_t step = n / static_cast<std::uint32_t>(p);
  for (std::uint32_t t = 0; t < p; ++t) subgroup_sum.set(t * step, one);

  const K p_inv = [&] {
    // p^-1 via the case hypotheses where possible, else the field inverse.
    if (case_id == 1) return p2 * pk;  // p^4 = 1 => p^-1 = p^3
    if (case_id == 2) return pk;       // p^2 = 1 => p^-1 = p
    return pk.inverse();
  }();

  SubgroupPair<K> out{subgroup_sum.scale(p_inv), AlgElement<K>(group), {}};
  switch (case_id) {
    case 1: out.beta = subgroup_sum.scale(pk); break;
    case 2: out.beta = subgroup_sum; break;
    case 3: out.beta = subgroup_sum.sub(out.alpha); break;
  }

  const AlgElement<K> unit = AlgElement<K>::unit(group, one);
  out.report.alpha_nontrivial_idempotent =
      out.alpha.is_idempotent() && !out.alpha.is_zero() && out.alpha != unit;
  out.report.beta_squares_to_alpha = out.beta.mul(out.beta) == out.alpha;
  out.report.absorption_holds = out.alpha.mul(out.beta) == out.beta;
  out.report.beta_excluded =
      !out.beta.is_zero() && out.beta != unit && out.beta != out.alpha;
  return out;
}

}  // namespace

SubgroupPair<Rational> subgroup_idempotent_pair_rational(std::uint32_t n, std::uint64_t p,
                                                         int case_id) {
  return subgroup_pair_impl<Rational>(AbGroup::cyclic(n), p, case_id,
                                      [](std::int64_t v) { return Rational(static_cast<long>(v)); });
}

SubgroupPair<PrimeFieldElem> subgroup_idempotent_pair_mod(std::uint64_t q, std::uint32_t n,
                                                          std::uint64_t p, int case_id) {
  return subgroup_pair_impl<PrimeFieldElem>(
      AbGroup::cyclic(n), p, case_id,
      [q](std::int64_t v) { return PrimeFieldElem(q, v); });
}

}  // namespace sidem
