#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "sojourn/theorems.hpp"

namespace sojourn {

namespace {

constexpr std::array<PqrsComponent, 4> kComponents = {PqrsComponent::p, PqrsComponent::q,
                                                     PqrsComponent::r, PqrsComponent::s};

void compare_series(CheckReport& report, const BiSeries& expected, const BiSeries& actual,
                    const std::string& which) {
  int tz = std::min(expected.trunc_z(), actual.trunc_z());
  int tt = std::min(expected.trunc_t(), actual.trunc_t());
  for (int n = 0; n <= tz; ++n) {
    for (int k = 0; k <= tt; ++k) report.expect_equal(n, k, which, expected.coeff(n, k), actual.coeff(n, k));
  }
}

std::string entry_name(int i, int j) {
  return "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

// u~^x for all four components and every start in [lo, hi].
class ComponentSeries {
 public:
  ComponentSeries(int lo, int hi, int order) {
    for (int x = lo; x <= hi; ++x) {
      SojournTable table = SojournTable::evolve(x, order);
      for (auto c : kComponents) series_.emplace(key(x, c), dp_component_series(table, c, order));
    }
  }

  const BiSeries& operator()(PqrsComponent c, int x) const { return series_.at(key(x, c)); }

 private:
  static std::pair<int, int> key(int x, PqrsComponent c) { return {x, static_cast<int>(c)}; }
  std::map<std::pair<int, int>, BiSeries> series_;
};

}  // namespace

BiSeries dp_component_series(const SojournTable& table, PqrsComponent which, int order) {
  if (table.n_max() < order) throw std::invalid_argument("DP table shallower than requested order");
  BiSeries f(order, order);
  for (int n = 1; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) {
      Mat2 psi = table.psi(n, k);
      if (psi.is_zero()) continue;
      f.set(n, k, component(pqrs_decompose(psi), which));
    }
  }
  return f;
}

BiSeries gamma_entry_series(const GammaTable& gammas, int i, int j, int order) {
  if (gammas.n_max() < order) throw std::invalid_argument("Gamma table shallower than requested order");
  BiSeries f(order, order);
  for (int n = 1; n <= order; ++n) {
    for (int k = 0; k <= n; ++k) f.set(n, k, gammas.at(n, k)(i, j));
  }
  return f;
}

CheckReport compare_theorem1_with_dp(const Theorem1Series& closed, const SojournTable& table, int order) {
  if (table.start() != 0) throw std::invalid_argument("Theorem 1 comparison needs a table from the origin");
  CheckReport report{"closed-form PQRS series vs DP", 0, {}};
  for (auto c : kComponents) {
    BiSeries dp = even_part(dp_component_series(table, c, order));
    compare_series(report, dp, closed.get(c).truncated(order, order),
                   std::string(1, component_name(c)) + "_bar: DP vs closed form");
  }
  return report;
}

CheckReport check_theorem1_division_free(int order) {
  CheckReport report{"closed-form PQRS numerators vs DP * denominator", 0, {}};
  auto quotients = theorem1_quotients(order);
  SojournTable table = SojournTable::evolve(0, order);
  for (std::size_t idx = 0; idx < kComponents.size(); ++idx) {
    auto c = kComponents[idx];
    BiSeries dp = even_part(dp_component_series(table, c, order));
    compare_series(report, quotients[idx].num, dp * quotients[idx].den,
                   std::string(1, component_name(c)) + "_bar: numerator vs DP*denominator");
  }
  return report;
}

CheckReport compare_theorem2_with_gammas(const Theorem2Series& closed, const GammaTable& gammas, int order,
                                         const std::string& side) {
  CheckReport report{"bridge generating function vs " + side, 0, {}};
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      BiSeries table_series = even_part(gamma_entry_series(gammas, i, j, order));
      compare_series(report, table_series, closed.gamma_bar(i, j).truncated(order, order),
                     entry_name(i, j) + ": " + side + " vs closed form");
    }
  }
  return report;
}

CheckReport check_theorem2_division_free(int order) {
  CheckReport report{"bridge numerators vs C * DP", 0, {}};
  auto [num, c] = theorem2_numerator_and_c(order);
  GammaTable gammas = GammaTable::from_dp(SojournTable::evolve(0, order));
  for (int i = 0; i < 2; ++i) {
    for (int j = 0; j < 2; ++j) {
      BiSeries dp = even_part(gamma_entry_series(gammas, i, j, order));
      compare_series(report, num(i, j), c * dp, entry_name(i, j) + ": numerator vs C*DP");
    }
  }
  return report;
}

CheckReport check_fourn_subseries(const Theorem2Series& closed, int order) {
  CheckReport report{"z^{4n} sub-series of the bridge generating function", 0, {}};
  int blocks = order / 4;
  if (blocks < 1) return report;
  BiSeries one = BiSeries::constant(1, blocks, 0);
  BiSeries root = series_sqrt(one + BiSeries::monomial(1, 0, 1, blocks, 0));  // sqrt(1 + z) = sum b_n z^n
  Mat2 shape(-1, -1, 1, -1);
  for (int n = 1; n <= blocks; ++n) {
    Mat2 block = shape * (root.coeff(n, 0) * Qr2(Rational(1, 2)));
    for (int k = 0; k <= std::min(order, 4 * n); ++k) {
      bool inside = k % 2 == 0 && k >= 2 && k <= 4 * n - 2;
      Mat2 expected = inside ? block : Mat2::zero();
      Mat2 actual = closed.gamma_bar.coefficient(4 * n, k);
      for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) report.expect_equal(4 * n, k, entry_name(i, j), expected(i, j), actual(i, j));
      }
    }
  }
  return report;
}

namespace {

struct Coin {
  Qr2 a, b, c, d, delta;
};

Coin hadamard_entries() {
  Mat2 h = Mat2::hadamard();
  return {h(0, 0), h(0, 1), h(1, 0), h(1, 1), h.determinant()};
}

}  // namespace

CheckReport check_first_step_equations(int x_min, int x_max, int order) {
  if (x_min > -1 || x_max < 1) throw std::invalid_argument("check_first_step_equations needs x_min <= -1 < 1 <= x_max");
  CheckReport report{"first-step functional equations", 0, {}};
  ComponentSeries u(x_min - 1, x_max + 1, order);
  Coin h = hadamard_entries();
  using C = PqrsComponent;
  BiSeries z = BiSeries::monomial(1, 0, 1, order, order);
  BiSeries zt = BiSeries::monomial(1, 1, 1, order, order);
  BiSeries one = BiSeries::constant(1, order, order);
  for (int x = x_min; x <= x_max; ++x) {
    std::string regime = x < 0 ? "(i)" : (x == 0 ? "(ii)" : "(iii)");
    // Step to x-1 is counted when x >= 1; step to x+1 when x >= 0.
    const BiSeries& left_factor = x >= 1 ? zt : z;
    const BiSeries& right_factor = x >= 0 ? zt : z;
    std::string at = " x=" + std::to_string(x);
    compare_series(report, u(C::p, x),
                   left_factor * (u(C::p, x - 1) * h.a + u(C::r, x - 1) * h.c + one),
                   regime + " p" + at);
    compare_series(report, u(C::r, x), right_factor * (u(C::p, x + 1) * h.b + u(C::r, x + 1) * h.d),
                   regime + " r" + at);
    compare_series(report, u(C::q, x),
                   right_factor * (u(C::q, x + 1) * h.d + u(C::s, x + 1) * h.b + one),
                   regime + " q" + at);
    compare_series(report, u(C::s, x), left_factor * (u(C::q, x - 1) * h.c + u(C::s, x - 1) * h.a),
                   regime + " s" + at);
  }
  return report;
}

CheckReport check_three_term_recurrences(int x_min, int x_max, int order) {
  if (x_min > -1 || x_max < 1) throw std::invalid_argument("check_three_term_recurrences needs x_min <= -1 < 1 <= x_max");
  CheckReport report{"three-term recurrences in x", 0, {}};
  ComponentSeries u(x_min, x_max, order);
  Coin h = hadamard_entries();
  using C = PqrsComponent;
  BiSeries one = BiSeries::constant(1, order, order);
  BiSeries zero(order, order);

  auto run = [&](int x, const BiSeries& w, const std::string& regime) {
    // w d u^{x+2} - (delta w^2 + 1) u^{x+1} + w a u^x + inhomogeneity = 0
    BiSeries w2 = w * w;
    BiSeries middle = w2 * h.delta + one;
    auto lhs = [&](C c) { return w * u(c, x + 2) * h.d - middle * u(c, x + 1) + w * u(c, x) * h.a; };
    std::string at = " x=" + std::to_string(x);
    compare_series(report, zero, lhs(C::p) - w2 * h.d + w, regime + " p" + at);
    compare_series(report, zero, lhs(C::r) + w2 * h.b, regime + " r" + at);
    compare_series(report, zero, lhs(C::q) - w2 * h.a + w, regime + " q" + at);
    compare_series(report, zero, lhs(C::s) + w2 * h.c, regime + " s" + at);
  };

  BiSeries z = BiSeries::monomial(1, 0, 1, order, order);
  BiSeries zt = BiSeries::monomial(1, 1, 1, order, order);
  for (int x = x_min; x <= -2 && x + 2 <= x_max; ++x) run(x, z, "(i)");
  for (int x = std::max(0, x_min); x + 2 <= x_max; ++x) run(x, zt, "(ii)");
  return report;
}

}  // namespace sojourn
