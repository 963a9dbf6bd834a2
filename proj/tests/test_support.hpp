#pragma once

#include <algorithm>
#include <map>
#include <random>
#include <utility>
#include <vector>

#include "sojourn/bi_series.hpp"
#include "sojourn/mat2.hpp"
#include "sojourn/pqrs.hpp"
#include "sojourn/walk_paths.hpp"

namespace sojourn::testing {

/// Small random rationals num/den with |num| <= 9 and 1 <= den <= 8.
inline Rational random_rational(std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 8);
  return Rational(num(rng), den(rng));
}

inline Qr2 random_qr2(std::mt19937& rng) { return Qr2(random_rational(rng), random_rational(rng)); }

inline Mat2 random_mat2(std::mt19937& rng) {
  return Mat2(random_qr2(rng), random_qr2(rng), random_qr2(rng), random_qr2(rng));
}

/// Random series with constant term 1 and roughly half of the other terms set.
inline BiSeries random_unit_series(std::mt19937& rng, int tz, int tt) {
  BiSeries f(tz, tt);
  std::bernoulli_distribution keep(0.5);
  for (int i = 0; i <= tz; ++i) {
    for (int j = 0; j <= tt; ++j) {
      if (i == 0 && j == 0) {
        f.set(0, 0, 1);
      } else if (keep(rng)) {
        f.set(i, j, random_qr2(rng));
      }
    }
  }
  return f;
}

/// All 2^n step sequences from x0, keyed by (endpoint, positive intervals).
/// Each path contributes its ordered product with later steps on the left.
inline std::map<std::pair<int, int>, Mat2> enumerate_paths(int x0, int n) {
  const Mat2& p = hadamard_basis().p;
  const Mat2& q = hadamard_basis().q;
  std::map<std::pair<int, int>, Mat2> out;
  for (unsigned mask = 0; mask < (1u << n); ++mask) {
    Mat2 product = Mat2::identity();
    int x = x0;
    int k = 0;
    for (int step = 0; step < n; ++step) {
      bool right = (mask >> step) & 1u;
      int next = right ? x + 1 : x - 1;
      if (std::max(x, next) >= 1) ++k;
      product = (right ? q : p) * product;
      x = next;
    }
    auto [it, fresh] = out.try_emplace({x, k}, product);
    if (!fresh) it->second = it->second + product;
  }
  return out;
}

/// alpha = e^{i theta}/sqrt 2 and beta = +-i alpha for angles with exact
/// cosines: the eight multiples of pi/4 and three Pythagorean angles.
inline std::vector<QubitState> symmetric_states() {
  Qr2 h = Qr2::inv_sqrt2();
  auto q = [](long a, long b) { return Qr2(Rational(a, b)); };
  std::vector<std::pair<Qr2, Qr2>> cs = {{1, 0},  {h, h},   {0, 1},        {-h, h},           {-1, 0},         {-h, -h},
                                        {0, -1}, {h, -h}, {q(3, 5), q(4, 5)}, {q(-5, 13), q(12, 13)}, {q(8, 17), q(-15, 17)}};
  std::vector<QubitState> out;
  for (const auto& [c, s] : cs) {
    QrComplex a{c * h, s * h};
    out.emplace_back(a, QrComplex{-a.im, a.re});
    out.emplace_back(a, QrComplex{a.im, -a.re});
  }
  return out;
}

}  // namespace sojourn::testing
