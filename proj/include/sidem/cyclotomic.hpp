#pragma once

/**
 * @file cyclotomic.hpp
 * @brief The cyclotomic field Q(zeta_n), computed exactly.
 *
 * A CycloNumber is a residue mod the n-th cyclotomic polynomial with
 * rational coefficients. Phi_n is irreducible over Q, so this is a field:
 * every nonzero element has an inverse (extended Euclid against Phi_n).
 * Q(zeta_n) contains every n-th root of unity, which is all the character
 * theory of an abelian group of exponent n ever needs.
 */

#include "sidem/rational.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace sidem {

/// Coefficients of Phi_n, ascending degree; computed by exact division of
/// x^n - 1 by the product of the Phi_d for proper divisors d.
std::vector<long long> cyclotomic_polynomial(std::uint32_t n);

class CycloNumber {
 public:
  static CycloNumber zero(std::uint32_t order);
  static CycloNumber one(std::uint32_t order);
  static CycloNumber from_rational(std::uint32_t order, const Rational& r);
  /// zeta_n, a primitive n-th root of unity.
  static CycloNumber zeta(std::uint32_t order);
  /// zeta_n^e (e may be any integer).
  static CycloNumber zeta_pow(std::uint32_t order, std::int64_t e);

  std::uint32_t order() const { return order_; }
  /// Coefficients in the power basis 1, zeta, ..., zeta^(deg Phi_n - 1).
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  CycloNumber operator+(const CycloNumber& o) const;
  CycloNumber operator-(const CycloNumber& o) const;
  CycloNumber operator*(const CycloNumber& o) const;
  CycloNumber operator-() const;
  CycloNumber inverse() const;
  CycloNumber operator/(const CycloNumber& o) const { return *this * o.inverse(); }

  bool operator==(const CycloNumber& o) const;
  bool operator!=(const CycloNumber& o) const { return !(*this == o); }

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const;
  /// The value as a Rational; throws unless is_rational().
  Rational as_rational() const;

  /// Polynomial in ζ, e.g. "1/3 + 2/3*ζ + -1*ζ^2"; "0" when zero.
  std::string to_string() const;

  static constexpr bool characteristic_zero = true;

 private:
  CycloNumber(std::uint32_t order, std::vector<Rational> coeffs);

  std::uint32_t order_;
  std::vector<Rational> coeffs_;  // length deg Phi_order, always reduced
};

}  // namespace sidem
