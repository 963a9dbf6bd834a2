#include "sojourn/bi_series.hpp"

#include <algorithm>
#include <string>

namespace sojourn {

BiSeries::BiSeries(int trunc_z, int trunc_t) : trunc_z_(trunc_z), trunc_t_(trunc_t) {
  if (trunc_z < 0 || trunc_t < 0) throw std::invalid_argument("truncation orders must be non-negative");
  c_.resize(static_cast<std::size_t>(trunc_z + 1) * static_cast<std::size_t>(trunc_t + 1));
}

BiSeries BiSeries::constant(const Qr2& c, int trunc_z, int trunc_t) {
  return monomial(0, 0, c, trunc_z, trunc_t);
}

BiSeries BiSeries::monomial(int i, int j, const Qr2& c, int trunc_z, int trunc_t) {
  BiSeries f(trunc_z, trunc_t);
  if (i <= trunc_z && j <= trunc_t) f.set(i, j, c);
  return f;
}

const Qr2& BiSeries::coeff(int i, int j) const {
  static const Qr2 kZero;
  if (i < 0 || j < 0) return kZero;
  if (i > trunc_z_ || j > trunc_t_) {
    throw std::out_of_range("coefficient (" + std::to_string(i) + ", " + std::to_string(j) +
                            ") beyond truncation (" + std::to_string(trunc_z_) + ", " +
                            std::to_string(trunc_t_) + ")");
  }
  return c_[index(i, j)];
}

void BiSeries::set(int i, int j, Qr2 value) {
  if (i < 0 || j < 0 || i > trunc_z_ || j > trunc_t_) throw std::out_of_range("BiSeries::set outside truncation");
  c_[index(i, j)] = std::move(value);
}

void BiSeries::add_to(int i, int j, const Qr2& value) {
  if (i < 0 || j < 0 || i > trunc_z_ || j > trunc_t_) throw std::out_of_range("BiSeries::add_to outside truncation");
  c_[index(i, j)] += value;
}

bool BiSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Qr2& x) { return x.is_zero(); });
}

std::pair<int, int> BiSeries::monomial_valuation() const {
  int a = trunc_z_ + 1;
  int b = trunc_t_ + 1;
  for (int i = 0; i <= trunc_z_; ++i) {
    for (int j = 0; j <= trunc_t_; ++j) {
      if (c_[index(i, j)].is_zero()) continue;
      a = std::min(a, i);
      b = std::min(b, j);
    }
  }
  if (a > trunc_z_) throw DivisionByZero("series is zero on all retained coefficients");
  return {a, b};
}

BiSeries BiSeries::truncated(int trunc_z, int trunc_t) const {
  BiSeries r(std::min(trunc_z, trunc_z_), std::min(trunc_t, trunc_t_));
  for (int i = 0; i <= r.trunc_z_; ++i) {
    for (int j = 0; j <= r.trunc_t_; ++j) r.c_[r.index(i, j)] = c_[index(i, j)];
  }
  return r;
}

BiSeries BiSeries::shifted(int dz, int dt) const {
  if (dz < 0 || dt < 0) throw std::invalid_argument("shift must be non-negative");
  BiSeries r(trunc_z_, trunc_t_);
  for (int i = 0; i + dz <= trunc_z_; ++i) {
    for (int j = 0; j + dt <= trunc_t_; ++j) r.c_[r.index(i + dz, j + dt)] = c_[index(i, j)];
  }
  return r;
}

BiSeries& BiSeries::operator+=(const BiSeries& o) {
  if (o.trunc_z_ < trunc_z_ || o.trunc_t_ < trunc_t_) {
    *this = truncated(o.trunc_z_, o.trunc_t_);
  }
  for (int i = 0; i <= trunc_z_; ++i) {
    for (int j = 0; j <= trunc_t_; ++j) c_[index(i, j)] += o.c_[o.index(i, j)];
  }
  return *this;
}

BiSeries& BiSeries::operator-=(const BiSeries& o) {
  if (o.trunc_z_ < trunc_z_ || o.trunc_t_ < trunc_t_) {
    *this = truncated(o.trunc_z_, o.trunc_t_);
  }
  for (int i = 0; i <= trunc_z_; ++i) {
    for (int j = 0; j <= trunc_t_; ++j) c_[index(i, j)] -= o.c_[o.index(i, j)];
  }
  return *this;
}

BiSeries& BiSeries::operator*=(const Qr2& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

namespace {

struct Term {
  int i;
  int j;
  const Qr2* value;
};

std::vector<Term> support(const BiSeries& f, int max_i, int max_j) {
  std::vector<Term> terms;
  for (int i = 0; i <= max_i; ++i) {
    for (int j = 0; j <= max_j; ++j) {
      const Qr2& x = f.coeff(i, j);
      if (!x.is_zero()) terms.push_back({i, j, &x});
    }
  }
  return terms;
}

}  // namespace

BiSeries operator*(const BiSeries& f, const BiSeries& g) {
  int tz = std::min(f.trunc_z(), g.trunc_z());
  int tt = std::min(f.trunc_t(), g.trunc_t());
  BiSeries r(tz, tt);
  auto fs = support(f, tz, tt);
  auto gs = support(g, tz, tt);
  for (const auto& a : fs) {
    for (const auto& b : gs) {
      int i = a.i + b.i;
      int j = a.j + b.j;
      if (i <= tz && j <= tt) r.add_to(i, j, *a.value * *b.value);
    }
  }
  return r;
}

BiSeries series_mul(const BiSeries& f, const BiSeries& g) { return f * g; }

BiSeries series_inverse(const BiSeries& f) {
  const Qr2& c0 = f.coeff(0, 0);
  if (c0.is_zero()) throw DivisionByZero("series has no inverse: zero constant term");
  Qr2 inv0 = c0.inverse();
  int tz = f.trunc_z();
  int tt = f.trunc_t();
  BiSeries g(tz, tt);
  auto fs = support(f, tz, tt);
  // g_ij = -(1/f_00) sum_{(a,b) != 0} f_ab g_{i-a, j-b}, filled in lexicographic order.
  for (int i = 0; i <= tz; ++i) {
    for (int j = 0; j <= tt; ++j) {
      if (i == 0 && j == 0) {
        g.set(0, 0, inv0);
        continue;
      }
      Qr2 acc;
      for (const auto& term : fs) {
        if ((term.i == 0 && term.j == 0) || term.i > i || term.j > j) continue;
        const Qr2& gv = g.coeff(i - term.i, j - term.j);
        if (!gv.is_zero()) acc += *term.value * gv;
      }
      if (!acc.is_zero()) g.set(i, j, -(acc * inv0));
    }
  }
  return g;
}

BiSeries series_div(const BiSeries& num, const BiSeries& den) {
  auto [a, b] = den.monomial_valuation();
  int tz = std::min(num.trunc_z(), den.trunc_z());
  int tt = std::min(num.trunc_t(), den.trunc_t());
  for (int i = 0; i <= num.trunc_z(); ++i) {
    for (int j = 0; j <= num.trunc_t(); ++j) {
      if ((i < a || j < b) && !num.coeff(i, j).is_zero()) {
        throw NonPowerSeriesQuotient("non-power-series quotient: numerator term z^" + std::to_string(i) +
                                     " t^" + std::to_string(j) + " is not divisible by z^" +
                                     std::to_string(a) + " t^" + std::to_string(b));
      }
    }
  }
  if (a > tz || b > tt) throw NonPowerSeriesQuotient("quotient has no retained coefficients");
  BiSeries n_red(tz - a, tt - b);
  BiSeries d_red(tz - a, tt - b);
  for (int i = 0; i <= tz - a; ++i) {
    for (int j = 0; j <= tt - b; ++j) {
      n_red.set(i, j, num.coeff(i + a, j + b));
      d_red.set(i, j, den.coeff(i + a, j + b));
    }
  }
  return n_red * series_inverse(d_red);
}

BiSeries operator/(const BiSeries& a, const BiSeries& b) { return series_div(a, b); }

BiSeries series_sqrt(const BiSeries& f) {
  if (f.coeff(0, 0) != Qr2(1)) {
    throw std::domain_error("series_sqrt requires constant term 1, got " + f.coeff(0, 0).to_string());
  }
  int tz = f.trunc_z();
  int tt = f.trunc_t();
  BiSeries g(tz, tt);
  g.set(0, 0, 1);
  // From g^2 = f with g_00 = 1: 2 g_ij = f_ij - sum of g_ab g_cd over the
  // remaining splits (a+c, b+d) = (i, j) that avoid the constant term.
  Qr2 half(Rational(1, 2));
  for (int i = 0; i <= tz; ++i) {
    for (int j = 0; j <= tt; ++j) {
      if (i == 0 && j == 0) continue;
      Qr2 acc = f.coeff(i, j);
      for (int a = 0; a <= i; ++a) {
        for (int b = 0; b <= j; ++b) {
          if ((a == 0 && b == 0) || (a == i && b == j)) continue;
          const Qr2& x = g.coeff(a, b);
          if (x.is_zero()) continue;
          const Qr2& y = g.coeff(i - a, j - b);
          if (!y.is_zero()) acc -= x * y;
        }
      }
      if (!acc.is_zero()) g.set(i, j, acc * half);
    }
  }
  return g;
}

BiSeries substitute_sign(const BiSeries& f, bool flip_z, bool flip_t) {
  BiSeries r = f;
  for (int i = 0; i <= f.trunc_z(); ++i) {
    for (int j = 0; j <= f.trunc_t(); ++j) {
      bool odd = (flip_z && i % 2 == 1) != (flip_t && j % 2 == 1);
      if (odd) r.set(i, j, -f.coeff(i, j));
    }
  }
  return r;
}

BiSeries even_part(const BiSeries& f) {
  BiSeries sum = f + substitute_sign(f, true, false) + substitute_sign(f, false, true) +
                 substitute_sign(f, true, true);
  return sum * Qr2(Rational(1, 4));
}

bool agree_on_common_terms(const BiSeries& f, const BiSeries& g) {
  int tz = std::min(f.trunc_z(), g.trunc_z());
  int tt = std::min(f.trunc_t(), g.trunc_t());
  for (int i = 0; i <= tz; ++i) {
    for (int j = 0; j <= tt; ++j) {
      if (f.coeff(i, j) != g.coeff(i, j)) return false;
    }
  }
  return true;
}

}  // namespace sojourn
