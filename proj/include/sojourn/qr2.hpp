#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace sojourn {

using Rational = mpq_class;

class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Exact element a + b*sqrt(2) of the real quadratic field Q(sqrt 2).
///
/// Both parts are GMP rationals and stay in lowest terms after every
/// operation, so equality is structural.
class Qr2 {
 public:
  Qr2() = default;
  Qr2(long value) : rat_(value) {}  // NOLINT(google-explicit-constructor)
  Qr2(Rational rat, Rational rad = 0);

  static Qr2 sqrt2() { return Qr2(0, 1); }
  /// 1/sqrt(2) = sqrt(2)/2, the Hadamard coin entry.
  static Qr2 inv_sqrt2() { return Qr2(0, Rational(1, 2)); }

  const Rational& rat() const { return rat_; }
  const Rational& rad() const { return rad_; }

  bool is_zero() const { return sgn(rat_) == 0 && sgn(rad_) == 0; }
  bool is_rational() const { return sgn(rad_) == 0; }

  /// Galois conjugate a - b*sqrt(2).
  Qr2 conjugate() const { return Qr2(rat_, -rad_); }
  /// Field norm a^2 - 2b^2; zero only for zero.
  Rational norm() const { return rat_ * rat_ - 2 * rad_ * rad_; }
  Qr2 inverse() const;

  /// Sign of the real number a + b*sqrt(2).
  int sign() const;
  double to_double() const;

  Qr2& operator+=(const Qr2& o);
  Qr2& operator-=(const Qr2& o);
  Qr2& operator*=(const Qr2& o);
  Qr2& operator/=(const Qr2& o);

  friend Qr2 operator+(Qr2 a, const Qr2& b) { return a += b; }
  friend Qr2 operator-(Qr2 a, const Qr2& b) { return a -= b; }
  friend Qr2 operator*(Qr2 a, const Qr2& b) { return a *= b; }
  friend Qr2 operator/(Qr2 a, const Qr2& b) { return a /= b; }
  friend Qr2 operator-(const Qr2& a) { return Qr2(-a.rat_, -a.rad_); }

  friend bool operator==(const Qr2& a, const Qr2& b) {
    return a.rat_ == b.rat_ && a.rad_ == b.rad_;
  }
  friend bool operator<(const Qr2& a, const Qr2& b) { return (a - b).sign() < 0; }
  friend bool operator>(const Qr2& a, const Qr2& b) { return b < a; }
  friend bool operator<=(const Qr2& a, const Qr2& b) { return !(b < a); }
  friend bool operator>=(const Qr2& a, const Qr2& b) { return !(a < b); }

  /// Canonical text form: "a" when the radical part is zero, "c*sqrt(2)" when
  /// the rational part is zero, otherwise "a + c*sqrt(2)" / "a - c*sqrt(2)".
  /// Rationals are printed by GMP ("3", "-1/2").
  std::string to_string() const;
  /// Accepts everything to_string emits, plus "a + -c*sqrt(2)" and "sqrt(2)".
  static Qr2 parse(std::string_view text);

 private:
  Rational rat_{0};
  Rational rad_{0};
};

std::ostream& operator<<(std::ostream& os, const Qr2& x);

/// Parses a GMP-style rational ("-3", "5/8"); throws ParseError.
Rational parse_rational(std::string_view text);

}  // namespace sojourn
