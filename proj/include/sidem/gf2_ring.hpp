#pragma once

/**
 * @file gf2_ring.hpp
 * @brief Exact arithmetic in the group ring Z2[Cn] = Z2[x]/(x^n - 1).
 *
 * An element is a set of exponents in [0, n): the support of a polynomial
 * with coefficients in Z2. Addition is symmetric difference, multiplication
 * is cyclic convolution with parity counting, and squaring doubles every
 * exponent mod n (Frobenius). The support lives in a dense bit vector so the
 * ring operations are word operations; n up to a few times 10^4 stays well
 * under a millisecond per product.
 */

#include <cstdint>
#include <string>
#include <vector>

namespace sidem {

class Gf2Element {
 public:
  /// Zero element of Z2[Cn].
  static Gf2Element zero(std::uint32_t n);
  /// Multiplicative identity g^0.
  static Gf2Element one(std::uint32_t n);
  /// Builds an element from a list of exponents. Exponents are reduced
  /// mod n; an exponent listed an even number of times cancels.
  static Gf2Element make(std::uint32_t n, const std::vector<std::int64_t>& exponents);

  std::uint32_t modulus() const { return n_; }
  /// Ascending list of exponents with coefficient 1.
  std::vector<std::uint32_t> support() const;
  std::size_t weight() const;
  bool test(std::uint32_t exponent) const;
  bool is_zero() const;
  bool is_one() const;

  Gf2Element add(const Gf2Element& rhs) const;
  Gf2Element mul(const Gf2Element& rhs) const;
  Gf2Element square() const;
  bool is_idempotent() const;
  /// Adds 1 (toggles exponent 0); involutive.
  Gf2Element complement_one() const;

  /// Canonical form: terms "1", "g", "g^e" joined by " + " with ascending
  /// exponents; "0" for the zero element.
  std::string to_string() const;
  /// Inverse of to_string; accepts any exponents, reducing mod n.
  static Gf2Element parse(std::uint32_t n, const std::string& text);

  bool operator==(const Gf2Element& rhs) const;
  bool operator!=(const Gf2Element& rhs) const { return !(*this == rhs); }

  friend Gf2Element operator+(const Gf2Element& a, const Gf2Element& b) { return a.add(b); }
  friend Gf2Element operator*(const Gf2Element& a, const Gf2Element& b) { return a.mul(b); }

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  explicit Gf2Element(std::uint32_t n);
  void toggle(std::uint32_t exponent);

  std::uint32_t n_;
  std::vector<std::uint64_t> words_;  // bit e set <=> coefficient of g^e is 1
};

/// Strict weak order: by support size, then by ascending exponent list.
/// Used for every canonical enumeration so output is reproducible.
bool canonical_less(const Gf2Element& a, const Gf2Element& b);

struct Gf2ElementHash {
  std::size_t operator()(const Gf2Element& e) const;
};

}  // namespace sidem
