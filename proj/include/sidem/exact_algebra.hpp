#pragma once

/**
 * @file exact_algebra.hpp
 * @brief Group algebras over exact coefficient fields.
 *
 * Covers the characteristic-0 theory (negation witnesses, co-idempotents,
 * primitive idempotents from characters) for cyclic and two-factor abelian
 * groups, plus the subgroup-average idempotent pairs over prime fields and
 * the rationals. The ambient field for the character theory is Q(zeta_N),
 * N the exponent of the group; all arithmetic is exact.
 */

#include "sidem/cyclotomic.hpp"
#include "sidem/rational.hpp"
#include "sidem/s_classify.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace sidem {

/// Cyclic(n) or product Z_m x Z_n; elements are indexed canonically, with
/// product element (k, j) at index k*n + j.
class AbGroup {
 public:
  enum class Kind { Cyclic, Product };

  static AbGroup cyclic(std::uint32_t n);
  static AbGroup product(std::uint32_t m, std::uint32_t n);

  Kind kind() const { return kind_; }
  std::uint32_t first_order() const { return m_; }
  std::uint32_t second_order() const { return n_; }
  std::uint32_t size() const;
  std::uint32_t exponent() const;  // lcm of the factor orders

  std::uint32_t add(std::uint32_t i, std::uint32_t j) const;
  std::uint32_t inverse(std::uint32_t i) const;

  /// e with chi_j(g_i) = zeta_N^e, N = exponent().
  std::uint32_t character_exponent(std::uint32_t chi, std::uint32_t elem) const;

  std::string element_name(std::uint32_t i) const;
  std::string describe() const;  // "cyclic:4" / "product:2x2"

  bool operator==(const AbGroup& o) const {
    return kind_ == o.kind_ && m_ == o.m_ && n_ == o.n_;
  }

 private:
  AbGroup(Kind kind, std::uint32_t m, std::uint32_t n) : kind_(kind), m_(m), n_(n) {}

  Kind kind_;
  std::uint32_t m_, n_;
};

/// Element of a prime field F_q, modulus carried at runtime.
class PrimeFieldElem {
 public:
  PrimeFieldElem(std::uint64_t q, std::int64_t value);

  std::uint64_t field_order() const { return q_; }
  std::uint64_t value() const { return v_; }

  PrimeFieldElem operator+(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-(const PrimeFieldElem& o) const;
  PrimeFieldElem operator*(const PrimeFieldElem& o) const;
  PrimeFieldElem operator-() const;
  PrimeFieldElem inverse() const;

  bool operator==(const PrimeFieldElem& o) const { return q_ == o.q_ && v_ == o.v_; }
  bool operator!=(const PrimeFieldElem& o) const { return !(*this == o); }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1 % q_; }
  std::string to_string() const { return std::to_string(v_); }

  static constexpr bool characteristic_zero = false;

 private:
  std::uint64_t q_, v_;
};

/// Sparse group-algebra element: coefficients keyed by group index, zeros
/// never stored. K is Rational, CycloNumber or PrimeFieldElem.
template <class K>
class AlgElement {
 public:
  explicit AlgElement(AbGroup group) : group_(std::move(group)) {}

  const AbGroup& group() const { return group_; }
  const std::map<std::uint32_t, K>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  void set(std::uint32_t index, const K& value) {
    if (index >= group_.size()) throw std::invalid_argument("AlgElement: index out of range");
    if (value.is_zero()) {
      coeffs_.erase(index);
    } else {
      coeffs_.insert_or_assign(index, value);
    }
  }

  const K* find(std::uint32_t index) const {
    auto it = coeffs_.find(index);
    return it == coeffs_.end() ? nullptr : &it->second;
  }

  AlgElement add(const AlgElement& o) const {
    require_same_group(o);
    AlgElement out = *this;
    for (const auto& [idx, c] : o.coeffs_) {
      const K* mine = out.find(idx);
      out.set(idx, mine ? *mine + c : c);
    }
    return out;
  }

  AlgElement sub(const AlgElement& o) const { return add(o.negate()); }

  AlgElement negate() const {
    AlgElement out(group_);
    for (const auto& [idx, c] : coeffs_) out.coeffs_.emplace(idx, -c);
    return out;
  }

  AlgElement mul(const AlgElement& o) const {
    require_same_group(o);
    AlgElement out(group_);
    for (const auto& [i, a] : coeffs_) {
      for (const auto& [j, b] : o.coeffs_) {
        const std::uint32_t idx = group_.add(i, j);
        const K prod = a * b;
        const K* cur = out.find(idx);
        out.set(idx, cur ? *cur + prod : prod);
      }
    }
    return out;
  }

  AlgElement scale(const K& s) const {
    AlgElement out(group_);
    for (const auto& [idx, c] : coeffs_) out.set(idx, c * s);
    return out;
  }

  bool operator==(const AlgElement& o) const {
    return group_ == o.group_ && coeffs_ == o.coeffs_;
  }
  bool operator!=(const AlgElement& o) const { return !(*this == o); }

  bool is_idempotent() const { return mul(*this) == *this; }

  /// 1 * identity-element; needs a sample scalar to know the domain.
  static AlgElement unit(const AbGroup& group, const K& one_value) {
    AlgElement out(group);
    out.set(0, one_value);
    return out;
  }

  bool is_one() const {
    return coeffs_.size() == 1 && coeffs_.begin()->first == 0 &&
           coeffs_.begin()->second.is_one();
  }

  std::string to_string() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [idx, c] : coeffs_) {
      if (!first) out << " + ";
      first = false;
      out << "(" << c.to_string() << ")";
      if (idx != 0) out << "*" << group_.element_name(idx);
    }
    return out.str();
  }

 private:
  void require_same_group(const AlgElement& o) const {
    if (!(group_ == o.group_)) throw std::invalid_argument("AlgElement: group mismatch");
  }

  AbGroup group_;
  std::map<std::uint32_t, K> coeffs_;
};

using CycloElement = AlgElement<CycloNumber>;

/// |G| pairwise-orthogonal idempotents e_j = |G|^-1 sum_g chi_j(g^-1) g,
/// indexed like the characters; they sum to 1 and every idempotent of the
/// algebra is a subset sum of them.
std::vector<CycloElement> primitive_idempotents(const AbGroup& group);

/// Sum of the primitive idempotents selected by the character mask
/// (bit j <=> e_j). Full mask gives 1, empty mask gives 0.
CycloElement idempotent_from_mask(const AbGroup& group, std::uint64_t mask);

/// Evaluation at every character: coordinates in which the algebra is
/// pointwise. Inverse below; the round trip is the identity.
std::vector<CycloNumber> character_coordinates(const CycloElement& a);
CycloElement from_character_coordinates(const AbGroup& group,
                                        const std::vector<CycloNumber>& coords);

/// The character mask of an idempotent (coordinates all 0/1); throws when
/// the element is not idempotent.
std::uint64_t character_mask(const CycloElement& a);

template <class K>
struct CharZeroWitness {
  AlgElement<K> beta;
  AbsorptionLaw law;
};

/// beta = -alpha witnesses any nontrivial idempotent alpha in
/// characteristic 0: beta^2 = alpha, alpha*beta = beta, beta outside
/// {0, 1, alpha}. All three are verified before returning.
template <class K>
CharZeroWitness<K> negation_witness(const AlgElement<K>& alpha) {
  static_assert(K::characteristic_zero,
                "negation witnesses live in characteristic-0 coefficient fields");
  if (!alpha.is_idempotent()) {
    throw std::invalid_argument("negation_witness: alpha is not idempotent");
  }
  if (alpha.is_zero() || alpha.is_one()) {
    throw std::invalid_argument("negation_witness: alpha must be nontrivial");
  }
  const AlgElement<K> beta = alpha.negate();
  if (beta.mul(beta) != alpha || alpha.mul(beta) != beta) {
    throw std::logic_error("negation_witness: identities failed verification");
  }
  if (beta.is_zero() || beta.is_one() || beta == alpha) {
    throw std::logic_error("negation_witness: beta is not outside {0, 1, alpha}");
  }
  return CharZeroWitness<K>{beta, AbsorptionLaw::AbsorbWitness};
}

/// Every beta with beta^2 = alpha and alpha*beta = beta, excluding alpha
/// itself: the sign choices on alpha's character mask, 2^|mask| - 1 of
/// them. Requires alpha idempotent and nonzero.
std::vector<CycloElement> co_idempotents(const CycloElement& alpha);

/// Which of the four witness requirements the subgroup-average pair meets.
struct SubgroupPairReport {
  bool alpha_nontrivial_idempotent = false;
  bool beta_squares_to_alpha = false;
  bool absorption_holds = false;
  bool beta_excluded = false;  // beta outside {0, 1, alpha}

  bool valid() const {
    return alpha_nontrivial_idempotent && beta_squares_to_alpha && absorption_holds &&
           beta_excluded;
  }
  std::string failed_requirements() const;
};

template <class K>
struct SubgroupPair {
  AlgElement<K> alpha;
  AlgElement<K> beta;
  SubgroupPairReport report;
};

/// alpha = p^-1 * sum of the order-p subgroup of cyclic(n); beta depends on
/// the case: (1) p * sum, requires p^4 = 1 in the field; (2) sum, requires
/// p^2 = 1; (3) (1 + g^(n/2)) - alpha, requires p = 2. Hypothesis failures
/// throw; witness-requirement failures are reported, never asserted away.
SubgroupPair<Rational> subgroup_idempotent_pair_rational(std::uint32_t n, std::uint64_t p,
                                                         int case_id);
SubgroupPair<PrimeFieldElem> subgroup_idempotent_pair_mod(std::uint64_t q, std::uint32_t n,
                                                          std::uint64_t p, int case_id);

}  // namespace sidem
