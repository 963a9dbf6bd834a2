#include "sojourn/measures.hpp"

#include <stdexcept>
#include <string>

#include "sojourn/bi_series.hpp"

namespace sojourn {

namespace {

void require_even(int n, int minimum, const char* what) {
  if (n < minimum || n % 2 != 0) {
    throw std::invalid_argument(std::string(what) + ": n must be even and at least " + std::to_string(minimum) +
                                ", got " + std::to_string(n));
  }
}

Rational central_binomial(int m) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), static_cast<unsigned long>(2 * m), static_cast<unsigned long>(m));
  return Rational(c);
}

Rational arcsine_value(int half_n, int half_k) {
  Rational v = central_binomial(half_k) * central_binomial(half_n - half_k);
  mpz_class denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), 4, static_cast<unsigned long>(half_n));
  v /= Rational(denom);
  return v;
}

}  // namespace

Qr2 SojournMeasure::total() const {
  Qr2 sum;
  for (const auto& [k, w] : weights) sum += w;
  return sum;
}

SojournMeasure make_measure(int n, std::map<int, Qr2> weights) {
  SojournMeasure m{n, std::move(weights), std::nullopt};
  Qr2 total = m.total();
  if (!total.is_zero()) {
    std::map<int, Qr2> normalized;
    Qr2 inv = total.inverse();
    for (const auto& [k, w] : m.weights) normalized[k] = w * inv;
    m.normalized = std::move(normalized);
  }
  return m;
}

Qr2 weight_a(const PqrsCoeffs& c, const QubitState& phi) {
  Qr2 half(Rational(1, 2));
  Qr2 pp = c.p * c.p;
  Qr2 qq = c.q * c.q;
  Qr2 rr = c.r * c.r;
  Qr2 ss = c.s * c.s;
  return half * (pp + rr + qq + ss) + (c.p * c.r + c.q * c.s) * phi.population_difference() +
         half * (pp - rr - qq + ss) * phi.coherence();
}

Qr2 weight_a_symmetric(const PqrsCoeffs& c) {
  return Qr2(Rational(1, 2)) * (c.p * c.p + c.r * c.r + c.q * c.q + c.s * c.s);
}

Qr2 weight_b(const Mat2& g, const QubitState& phi) {
  return (g(0, 0) * g(0, 0) + g(1, 0) * g(1, 0)) * phi.alpha().norm_squared() +
         (g(0, 1) * g(0, 1) + g(1, 1) * g(1, 1)) * phi.beta().norm_squared() +
         (g(0, 0) * g(0, 1) + g(1, 0) * g(1, 1)) * phi.coherence();
}

Qr2 weight_b_symmetric(const Mat2& g) {
  return Qr2(Rational(1, 2)) * inner_product(g, g);
}

SojournMeasure sojourn_measure_a(const SojournTable& table, int n, const QubitState& phi) {
  require_even(n, 0, "sojourn_measure_a");
  if (table.start() != 0) throw std::invalid_argument("sojourn_measure_a: table must start at the origin");
  std::map<int, Qr2> weights;
  for (int k = 0; k <= n; k += 2) weights[k] = weight_a(pqrs_decompose(table.psi(n, k)), phi);
  return make_measure(n, std::move(weights));
}

SojournMeasure sojourn_measure_a(int n, const QubitState& phi) {
  require_even(n, 0, "sojourn_measure_a");
  return sojourn_measure_a(SojournTable::evolve(0, n), n, phi);
}

SojournMeasure sojourn_measure_b(const SojournTable& table, int n, const QubitState& phi) {
  require_even(n, 0, "sojourn_measure_b");
  std::map<int, Qr2> weights;
  for (int k = 0; k <= n; k += 2) weights[k] = weight_b(table.gamma(n, k), phi);
  return make_measure(n, std::move(weights));
}

SojournMeasure sojourn_measure_b(int n, const QubitState& phi) {
  require_even(n, 0, "sojourn_measure_b");
  return sojourn_measure_b(SojournTable::evolve(0, n), n, phi);
}

SojournMeasure classical_arcsine(int n) {
  require_even(n, 0, "classical_arcsine");
  std::map<int, Qr2> weights;
  for (int k = 0; k <= n; k += 2) weights[k] = Qr2(arcsine_value(n / 2, k / 2));
  return make_measure(n, std::move(weights));
}

SojournMeasure classical_equidistribution(int n) {
  require_even(n, 2, "classical_equidistribution");
  std::map<int, Qr2> weights;
  Qr2 uniform(Rational(1, n / 2 + 1));
  for (int k = 0; k <= n; k += 2) weights[k] = uniform;
  return make_measure(n, std::move(weights));
}

CheckReport uniform_bridge_check(const SojournTable& table, int n) {
  if (n < 1) throw std::invalid_argument("uniform_bridge_check: n must be at least 1");
  CheckReport report{"uniform bridge measure at time " + std::to_string(4 * n), 0, {}};
  SojournMeasure mu = sojourn_measure_b(table, 4 * n, QubitState::phi_star());
  if (!mu.normalized) {
    report.mismatches.push_back({4 * n, 0, "total weight", "nonzero", "0"});
    return report;
  }
  Qr2 uniform(Rational(1, 2 * n - 1));
  for (const auto& [k, p] : *mu.normalized) {
    bool inside = k >= 2 && k <= 4 * n - 2;
    report.expect_equal(4 * n, k, "normalized bridge measure", inside ? uniform : Qr2(0), p);
  }
  return report;
}

CheckReport uniform_bridge_check(int n) {
  if (n < 1) throw std::invalid_argument("uniform_bridge_check: n must be at least 1");
  return uniform_bridge_check(SojournTable::evolve(0, 4 * n), n);
}

CheckReport classical_gf_check(int n_max) {
  if (n_max < 0) throw std::invalid_argument("classical_gf_check: negative n_max");
  CheckReport report{"classical sojourn generating function", 0, {}};
  int w = 2 * n_max;
  BiSeries one = BiSeries::constant(1, w, w);
  BiSeries denom = series_sqrt(one - BiSeries::monomial(2, 0, 1, w, w)) *
                   series_sqrt(one - BiSeries::monomial(2, 2, 1, w, w));
  BiSeries gf = series_div(one, denom);
  for (int i = 0; i <= w; ++i) {
    for (int j = 0; j <= w; ++j) {
      bool live = i % 2 == 0 && j % 2 == 0 && j <= i;
      Qr2 expected = live ? Qr2(arcsine_value(i / 2, j / 2)) : Qr2(0);
      report.expect_equal(i, j, "1/(sqrt(1-z^2) sqrt(1-z^2 t^2))", expected, gf.coeff(i, j));
    }
  }
  return report;
}

CentralTermComparison compare_central_terms(int n) {
  require_even(n, 4, "compare_central_terms");
  SojournMeasure quantum = sojourn_measure_a(n, QubitState::phi_star());
  SojournMeasure classical = classical_arcsine(n);
  int half = n / 2;
  CentralTermComparison out;
  out.n = n;
  if (half % 2 == 0) {
    out.central_ks = {half};
  } else {
    out.central_ks = {half - 1, half + 1};
  }
  int k = out.central_ks.front();
  out.quantum = quantum.normalized->at(k);
  out.classical = classical.normalized->at(k);
  out.quantum_smaller = out.quantum < out.classical;
  return out;
}

}  // namespace sojourn
