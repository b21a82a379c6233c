#pragma once

/**
 * @file rational.hpp
 * @brief Exact rational scalar. Arbitrary-precision, always reduced,
 *        denominator positive; no floating point anywhere.
 */

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace sidem {

class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long num) : v_(num) {}
  Rational(long num, long den) : v_(num, den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    v_.canonicalize();
  }

  /// Parses "a" or "a/b".
  static Rational from_string(const std::string& text) {
    Rational r;
    if (r.v_.set_str(text, 10) != 0) {
      throw std::invalid_argument("Rational: cannot parse \"" + text + "\"");
    }
    if (r.v_.get_den() == 0) throw std::invalid_argument("Rational: zero denominator");
    r.v_.canonicalize();
    return r;
  }

  Rational operator+(const Rational& o) const { return Rational(v_ + o.v_); }
  Rational operator-(const Rational& o) const { return Rational(v_ - o.v_); }
  Rational operator*(const Rational& o) const { return Rational(v_ * o.v_); }
  Rational operator/(const Rational& o) const {
    if (o.is_zero()) throw std::domain_error("Rational: division by zero");
    return Rational(v_ / o.v_);
  }
  Rational operator-() const { return Rational(-v_); }

  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }

  Rational inverse() const {
    if (is_zero()) throw std::domain_error("Rational: zero has no inverse");
    return Rational(1 / v_);
  }

  bool operator==(const Rational& o) const { return v_ == o.v_; }
  bool operator!=(const Rational& o) const { return v_ != o.v_; }
  bool operator<(const Rational& o) const { return v_ < o.v_; }

  bool is_zero() const { return v_ == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }

  /// "a" for integers, "a/b" otherwise; always lowest terms.
  std::string to_string() const { return v_.get_str(); }

  static constexpr bool characteristic_zero = true;

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

}  // namespace sidem
