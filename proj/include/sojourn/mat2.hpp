#pragma once

#include <array>
#include <iosfwd>

#include "sojourn/qr2.hpp"

namespace sojourn {

/// 2x2 matrix over Q(sqrt 2), row-major.
class Mat2 {
 public:
  Mat2() = default;
  Mat2(Qr2 a, Qr2 b, Qr2 c, Qr2 d) : e_{std::move(a), std::move(b), std::move(c), std::move(d)} {}

  static Mat2 zero() { return {}; }
  static Mat2 identity() { return Mat2(1, 0, 0, 1); }
  /// H = (1/sqrt 2) [[1, 1], [1, -1]].
  static Mat2 hadamard();

  const Qr2& operator()(int i, int j) const { return e_[2 * i + j]; }
  Qr2& operator()(int i, int j) { return e_[2 * i + j]; }

  bool is_zero() const;
  Qr2 trace() const { return e_[0] + e_[3]; }
  Qr2 determinant() const { return e_[0] * e_[3] - e_[1] * e_[2]; }
  Mat2 transpose() const { return Mat2(e_[0], e_[2], e_[1], e_[3]); }

  Mat2& operator+=(const Mat2& o);
  Mat2& operator-=(const Mat2& o);
  Mat2& operator*=(const Qr2& s);

  friend Mat2 operator+(Mat2 a, const Mat2& b) { return a += b; }
  friend Mat2 operator-(Mat2 a, const Mat2& b) { return a -= b; }
  friend Mat2 operator*(Mat2 a, const Qr2& s) { return a *= s; }
  friend Mat2 operator*(const Qr2& s, Mat2 a) { return a *= s; }
  friend Mat2 operator*(const Mat2& a, const Mat2& b);
  friend Mat2 operator-(const Mat2& a) { return a * Qr2(-1); }
  friend bool operator==(const Mat2& a, const Mat2& b) { return a.e_ == b.e_; }

 private:
  std::array<Qr2, 4> e_{};
};

/// Trace inner product <A|B> = tr(A* B). Entries are real, so the adjoint is
/// the plain transpose.
Qr2 inner_product(const Mat2& a, const Mat2& b);

std::ostream& operator<<(std::ostream& os, const Mat2& m);

}  // namespace sojourn
