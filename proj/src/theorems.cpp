#include "sojourn/theorems.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace sojourn {

SeriesMat2 SeriesMat2::identity(int trunc_z, int trunc_t) {
  BiSeries one = BiSeries::constant(1, trunc_z, trunc_t);
  BiSeries zero(trunc_z, trunc_t);
  return SeriesMat2(one, zero, zero, one);
}

int SeriesMat2::trunc_z() const {
  int t = e_[0].trunc_z();
  for (const auto& s : e_) t = std::min(t, s.trunc_z());
  return t;
}

int SeriesMat2::trunc_t() const {
  int t = e_[0].trunc_t();
  for (const auto& s : e_) t = std::min(t, s.trunc_t());
  return t;
}

Mat2 SeriesMat2::coefficient(int i, int j) const {
  return Mat2(e_[0].coeff(i, j), e_[1].coeff(i, j), e_[2].coeff(i, j), e_[3].coeff(i, j));
}

SeriesMat2 operator+(const SeriesMat2& a, const SeriesMat2& b) {
  return SeriesMat2(a(0, 0) + b(0, 0), a(0, 1) + b(0, 1), a(1, 0) + b(1, 0), a(1, 1) + b(1, 1));
}

SeriesMat2 operator-(const SeriesMat2& a, const SeriesMat2& b) {
  return SeriesMat2(a(0, 0) - b(0, 0), a(0, 1) - b(0, 1), a(1, 0) - b(1, 0), a(1, 1) - b(1, 1));
}

SeriesMat2 operator*(const SeriesMat2& a, const SeriesMat2& b) {
  return SeriesMat2(a(0, 0) * b(0, 0) + a(0, 1) * b(1, 0), a(0, 0) * b(0, 1) + a(0, 1) * b(1, 1),
                    a(1, 0) * b(0, 0) + a(1, 1) * b(1, 0), a(1, 0) * b(0, 1) + a(1, 1) * b(1, 1));
}

SeriesMat2 inverse(const SeriesMat2& m) {
  BiSeries det_inv = series_inverse(m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0));
  return SeriesMat2(m(1, 1) * det_inv, -(m(0, 1) * det_inv), -(m(1, 0) * det_inv), m(0, 0) * det_inv);
}

namespace {

// Shared building blocks at one truncation order.
struct Blocks {
  int order;
  BiSeries one, z2, t2, z2t2, a, b;

  explicit Blocks(int w)
      : order(w),
        one(BiSeries::constant(1, w, w)),
        z2(BiSeries::monomial(2, 0, 1, w, w)),
        t2(BiSeries::monomial(0, 2, 1, w, w)),
        z2t2(BiSeries::monomial(2, 2, 1, w, w)),
        a(series_sqrt(one + BiSeries::monomial(4, 0, 1, w, w))),
        b(series_sqrt(one + BiSeries::monomial(4, 4, 1, w, w))) {}

  BiSeries mono(int i, int j) const { return BiSeries::monomial(i, j, 1, order, order); }
  BiSeries c(const Qr2& v) const { return BiSeries::constant(v, order, order); }
};

void require_order(int order, const char* what) {
  if (order < 2) throw std::invalid_argument(std::string(what) + ": order must be at least 2");
}

}  // namespace

const BiSeries& Theorem1Series::get(PqrsComponent which) const {
  switch (which) {
    case PqrsComponent::p: return p_bar;
    case PqrsComponent::q: return q_bar;
    case PqrsComponent::r: return r_bar;
    case PqrsComponent::s: return s_bar;
  }
  return p_bar;
}

std::array<SeriesQuotient, 4> theorem1_quotients(int w) {
  Blocks k(w);
  const BiSeries& one = k.one;
  const BiSeries& A = k.a;
  const BiSeries& B = k.b;
  BiSeries one_plus_a = one + A;
  // sqrt(2) (1 - z^2)(1 - z^2 t^2)
  BiSeries base = (one - k.z2) * (one - k.z2t2) * Qr2::sqrt2();
  // 1 - (1 - A) t^2 + B
  BiSeries shared_q_s = one - (one - A) * k.t2 + B;

  SeriesQuotient p{
      k.mono(2, 2) * ((one - k.t2) * k.z2 * Qr2(2) + (one - k.z2t2) * A + (one - k.z2) * B),
      base * (one_plus_a * k.t2 + B - one)};

  SeriesQuotient r{-k.mono(4, 2) + one_plus_a * (one - B) + k.z2 * (one + one_plus_a * k.t2 - B),
                   base * Qr2(2)};

  SeriesQuotient q{
      k.mono(2, 2) * (k.mono(6, 2) - k.mono(4, 0) +
                      one_plus_a * ((k.c(2) - k.t2) * k.z2 - one - (one - k.z2) * B)),
      base * one_plus_a * shared_q_s};

  SeriesQuotient s{
      k.mono(4, 2) * ((one - k.mono(4, 4)) * A + (one - k.z2) * (one + k.z2t2) * B +
                      (one - k.z2t2) * A * B + (one - k.z2) * B * B),
      base * one_plus_a * (k.z2t2 + B - one) * shared_q_s};

  return {p, q, r, s};
}

Theorem1Series theorem1_series(int order) {
  require_order(order, "theorem1_series");
  // The p and s denominators vanish to order t^2 and z^2 t^2; four spare
  // orders cover the monomial extraction.
  auto quotients = theorem1_quotients(order + 4);
  auto expand = [order](const SeriesQuotient& q) {
    return series_div(q.num, q.den).truncated(order, order);
  };
  return {expand(quotients[0]), expand(quotients[1]), expand(quotients[2]), expand(quotients[3])};
}

std::pair<SeriesMat2, BiSeries> theorem2_numerator_and_c(int order) {
  Blocks k(order);
  BiSeries z2_minus_a = k.z2 - k.a;
  BiSeries z2t2_minus_b = k.z2t2 - k.b;
  BiSeries upper = k.one + k.z2t2 - k.b;         // 1 + z^2 t^2 - B
  BiSeries lower = k.a - k.one - k.z2;           // -1 - z^2 + A
  BiSeries c = -k.one - z2_minus_a * z2t2_minus_b;
  // The (1,1) numerator is +(z^2 - A)(1 + z^2 t^2 - B); with the opposite
  // sign the entry comes out as the negation of the bridge path sums.
  SeriesMat2 num(z2_minus_a * upper, upper, lower, -(lower * z2t2_minus_b));
  return {num, c};
}

Theorem2Series theorem2_series(int order) {
  require_order(order, "theorem2_series");
  auto [num, c] = theorem2_numerator_and_c(order);
  BiSeries c_inv = series_inverse(c);
  return {SeriesMat2(num(0, 0) * c_inv, num(0, 1) * c_inv, num(1, 0) * c_inv, num(1, 1) * c_inv)};
}

const Rational& FirstReturnAmplitudes::at(int n) const {
  if (n < 1 || n > n_max()) throw std::out_of_range("first-return amplitude index " + std::to_string(n));
  return a[static_cast<std::size_t>(n)];
}

Mat2 FirstReturnAmplitudes::positive_excursion(int r) const {
  Qr2 h(at(2 * r - 1) / 2);
  return Mat2(-h, h, 0, 0);
}

Mat2 FirstReturnAmplitudes::negative_excursion(int r) const {
  Qr2 h(at(2 * r - 1) / 2);
  return Mat2(0, 0, -h, -h);
}

FirstReturnAmplitudes first_return_amplitudes(int n_max) {
  if (n_max < 1) throw std::invalid_argument("first_return_amplitudes: n_max must be at least 1");
  int w = n_max + 1;
  BiSeries one = BiSeries::constant(1, w, 0);
  BiSeries numerator = series_sqrt(one + BiSeries::monomial(4, 0, 1, w, 0)) - one -
                       BiSeries::monomial(2, 0, 1, w, 0);
  BiSeries quotient = series_div(numerator, BiSeries::monomial(1, 0, 1, w, 0));
  FirstReturnAmplitudes out;
  out.a.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    const Qr2& v = quotient.coeff(n, 0);
    if (!v.is_rational()) throw std::logic_error("first-return amplitude is irrational");
    out.a[static_cast<std::size_t>(n)] = v.rat();
  }
  return out;
}

GammaTable::GammaTable(int n_max) : n_max_(n_max) {
  if (n_max < 0) throw std::invalid_argument("GammaTable: negative depth");
  rows_.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) rows_[static_cast<std::size_t>(n)].resize(static_cast<std::size_t>(n) + 1);
}

GammaTable GammaTable::from_dp(const SojournTable& table) {
  GammaTable g(table.n_max());
  for (int n = 0; n <= table.n_max(); ++n) {
    for (int k = 0; k <= n; ++k) g.set(n, k, table.gamma(n, k));
  }
  return g;
}

const Mat2& GammaTable::at(int n, int k) const {
  static const Mat2 kZero;
  if (n < 0 || n > n_max_) throw std::out_of_range("GammaTable: time " + std::to_string(n) + " out of range");
  if (k < 0 || k > n) return kZero;
  return rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

void GammaTable::set(int n, int k, Mat2 value) {
  if (n < 0 || n > n_max_ || k < 0 || k > n) throw std::out_of_range("GammaTable::set out of range");
  rows_[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)] = std::move(value);
}

GammaTable gamma_via_convolution(int n_max) {
  if (n_max < 0 || n_max % 2 != 0) {
    throw std::invalid_argument("gamma_via_convolution: n_max must be even and non-negative");
  }
  GammaTable out(n_max);
  out.set(0, 0, Mat2::identity());
  if (n_max == 0) return out;
  FirstReturnAmplitudes amps = first_return_amplitudes(n_max);
  int half = n_max / 2;
  for (int m = 1; m <= half; ++m) {
    for (int j = 0; j <= m; ++j) {
      Mat2 acc;
      // First excursion on the positive side, 2r steps.
      for (int r = 1; r <= j; ++r) acc += out.at(2 * (m - r), 2 * (j - r)) * amps.positive_excursion(r);
      // First excursion on the negative side.
      for (int r = 1; r <= m - j; ++r) acc += out.at(2 * (m - r), 2 * j) * amps.negative_excursion(r);
      out.set(2 * m, 2 * j, std::move(acc));
    }
  }
  return out;
}

SeriesMat2 x_matrix(int order) {
  Blocks k(order);
  Qr2 half(Rational(1, 2));
  BiSeries upper = (k.one + k.z2t2 - k.b) * half;  // (1 + (zt)^2 - sqrt(1 + (zt)^4)) / 2
  BiSeries lower = (k.one + k.z2 - k.a) * half;
  return SeriesMat2(upper, -upper, lower, lower);
}

CheckReport x_matrix_check(int order) {
  require_order(order, "x_matrix_check");
  CheckReport report{"X(I - X)^-1 vs closed form", 0, {}};
  SeriesMat2 x = x_matrix(order);
  SeriesMat2 i_minus_x = SeriesMat2::identity(order, order) - x;
  SeriesMat2 lhs = x * inverse(i_minus_x);
  Theorem2Series closed = theorem2_series(order);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 2; ++b) {
      std::string which = "entry (" + std::to_string(a + 1) + "," + std::to_string(b + 1) + "): closed form vs X(I-X)^-1";
      for (int n = 0; n <= order; ++n) {
        for (int kk = 0; kk <= order; ++kk) {
          report.expect_equal(n, kk, which, closed.gamma_bar(a, b).coeff(n, kk), lhs(a, b).coeff(n, kk));
        }
      }
    }
  }
  return report;
}

}  // namespace sojourn
