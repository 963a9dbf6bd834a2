#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "sojourn/qr2.hpp"

namespace sojourn {

class NonPowerSeriesQuotient : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated bivariate power series sum c_ij z^i t^j over Q(sqrt 2), keeping
/// 0 <= i <= trunc_z and 0 <= j <= trunc_t. Every arithmetic result is the
/// exact truncation of the corresponding operation on the full series.
class BiSeries {
 public:
  BiSeries(int trunc_z, int trunc_t);

  static BiSeries constant(const Qr2& c, int trunc_z, int trunc_t);
  /// c z^i t^j, or zero if the monomial falls outside the truncation.
  static BiSeries monomial(int i, int j, const Qr2& c, int trunc_z, int trunc_t);

  int trunc_z() const { return trunc_z_; }
  int trunc_t() const { return trunc_t_; }

  /// Coefficient of z^i t^j; zero for negative exponents. Throws
  /// std::out_of_range beyond the truncation.
  const Qr2& coeff(int i, int j) const;
  void set(int i, int j, Qr2 value);
  void add_to(int i, int j, const Qr2& value);

  bool is_zero() const;
  /// Greatest monomial z^a t^b dividing every nonzero term; throws
  /// DivisionByZero for the zero series.
  std::pair<int, int> monomial_valuation() const;

  BiSeries truncated(int trunc_z, int trunc_t) const;
  /// Multiplies by z^dz t^dt (dz, dt >= 0), keeping the truncation.
  BiSeries shifted(int dz, int dt) const;

  BiSeries& operator+=(const BiSeries& o);
  BiSeries& operator-=(const BiSeries& o);
  BiSeries& operator*=(const Qr2& s);

  friend BiSeries operator+(BiSeries a, const BiSeries& b) { return a += b; }
  friend BiSeries operator-(BiSeries a, const BiSeries& b) { return a -= b; }
  friend BiSeries operator-(BiSeries a) { return a *= Qr2(-1); }
  friend BiSeries operator*(BiSeries a, const Qr2& s) { return a *= s; }
  friend BiSeries operator*(const Qr2& s, BiSeries a) { return a *= s; }
  friend BiSeries operator*(const BiSeries& a, const BiSeries& b);
  friend BiSeries operator/(const BiSeries& a, const BiSeries& b);

  /// Structural equality, including truncation orders.
  friend bool operator==(const BiSeries& a, const BiSeries& b) {
    return a.trunc_z_ == b.trunc_z_ && a.trunc_t_ == b.trunc_t_ && a.c_ == b.c_;
  }

 private:
  std::size_t index(int i, int j) const {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(trunc_t_ + 1) +
           static_cast<std::size_t>(j);
  }

  int trunc_z_;
  int trunc_t_;
  std::vector<Qr2> c_;
};

/// Cauchy product truncated to the smaller orders.
BiSeries series_mul(const BiSeries& f, const BiSeries& g);

/// Exact quotient. The greatest common monomial z^a t^b of den is factored
/// out first; num must be divisible by it. The result keeps orders
/// (min trunc_z - a, min trunc_t - b).
BiSeries series_div(const BiSeries& num, const BiSeries& den);

/// Multiplicative inverse of a series with nonzero constant term.
BiSeries series_inverse(const BiSeries& f);

/// Square root with constant term 1; requires f(0, 0) = 1.
BiSeries series_sqrt(const BiSeries& f);

/// f(+-z, +-t): coefficient (i, j) picks up (-1)^(i*flip_z + j*flip_t).
BiSeries substitute_sign(const BiSeries& f, bool flip_z, bool flip_t);

/// Keeps only the terms with even powers of both z and t,
/// (1/4)[f(z,t) + f(-z,t) + f(z,-t) + f(-z,-t)].
BiSeries even_part(const BiSeries& f);

/// True when f and g agree on every coefficient both of them retain.
bool agree_on_common_terms(const BiSeries& f, const BiSeries& g);

}  // namespace sojourn
