#include "sojourn/mat2.hpp"

#include <ostream>

namespace sojourn {

Mat2 Mat2::hadamard() {
  Qr2 h = Qr2::inv_sqrt2();
  return Mat2(h, h, h, -h);
}

bool Mat2::is_zero() const {
  for (const auto& x : e_) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Mat2& Mat2::operator+=(const Mat2& o) {
  for (int i = 0; i < 4; ++i) e_[i] += o.e_[i];
  return *this;
}

Mat2& Mat2::operator-=(const Mat2& o) {
  for (int i = 0; i < 4; ++i) e_[i] -= o.e_[i];
  return *this;
}

Mat2& Mat2::operator*=(const Qr2& s) {
  for (auto& x : e_) x *= s;
  return *this;
}

Mat2 operator*(const Mat2& a, const Mat2& b) {
  Mat2 r;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      const Qr2& x = a(i, 0);
      const Qr2& y = a(i, 1);
      Qr2 acc;
      if (!x.is_zero() && !b(0, j).is_zero()) acc += x * b(0, j);
      if (!y.is_zero() && !b(1, j).is_zero()) acc += y * b(1, j);
      r(i, j) = std::move(acc);
    }
  }
  return r;
}

Qr2 inner_product(const Mat2& a, const Mat2& b) {
  Qr2 acc;
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) acc += a(i, j) * b(i, j);
  }
  return acc;
}

std::ostream& operator<<(std::ostream& os, const Mat2& m) {
  return os << "[[" << m(0, 0) << ", " << m(0, 1) << "], [" << m(1, 0) << ", " << m(1, 1) << "]]";
}

}  // namespace sojourn
