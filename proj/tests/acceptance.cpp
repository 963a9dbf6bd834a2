// One PASS/FAIL line per acceptance criterion. Exit status is the number of
// failed criteria.

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "sojourn/golden.hpp"
#include "sojourn/measures.hpp"
#include "sojourn/serialize.hpp"
#include "sojourn/theorems.hpp"
#include "test_support.hpp"

using namespace sojourn;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void fail(const std::string& what) {
    if (!pass) detail << "; ";
    if (pass) detail.str("");
    pass = false;
    detail << what;
  }
  void require(const CheckReport& r) {
    if (!r.ok()) fail(r.summary());
    checked += r.checked;
  }
  std::size_t checked = 0;
};

Qr2 q(long a, long b = 1) { return Qr2(Rational(a, b)); }

// A polynomial in t: (t power, integer coefficient) pairs.
using Poly = std::vector<std::pair<int, long>>;

struct Theorem1Row {
  PqrsComponent which;
  int z;
  long denom;  // coefficients are value / (denom * sqrt 2)
  Poly poly;
};

const std::vector<Theorem1Row>& theorem1_rows_expected() {
  using C = PqrsComponent;
  static const std::vector<Theorem1Row> rows = {
      {C::p, 2, 1, {{0, 1}}},
      {C::p, 4, 2, {{0, 3}, {2, -1}}},
      {C::p, 6, 4, {{0, 6}, {2, -1}, {4, -1}}},
      {C::p, 8, 8, {{0, 11}, {2, -2}, {4, 1}, {6, -2}}},
      {C::r, 2, 1, {{2, 1}}},
      {C::r, 4, 2, {{2, 1}, {4, 1}}},
      {C::r, 6, 4, {{2, 3}, {4, -1}, {6, 2}}},
      {C::r, 8, 8, {{2, 6}, {4, -1}, {6, -2}, {8, 5}}},
      {C::q, 2, 1, {{2, -1}}},
      {C::q, 4, 2, {{2, 1}, {4, -3}}},
      {C::q, 6, 4, {{2, 1}, {4, 1}, {6, -6}}},
      {C::q, 8, 8, {{2, 2}, {4, -1}, {6, 2}, {8, -11}}},
      {C::s, 2, 1, {{0, 1}}},
      {C::s, 4, 2, {{0, 1}, {2, 1}}},
      {C::s, 6, 4, {{0, 2}, {2, -1}, {4, 3}}},
      {C::s, 8, 8, {{0, 5}, {2, -2}, {4, -1}, {6, 6}}},
  };
  return rows;
}

struct Theorem2Row {
  int z;
  long denom;
  Poly entries[2][2];
};

// The z^10 top row has t^4 as its lowest power; ac2 also tries t^2.
const std::vector<Theorem2Row>& theorem2_rows_expected() {
  static const std::vector<Theorem2Row> rows = {
      {2, 2, {{{{2, 1}}, {{2, -1}}}, {{{0, 1}}, {{0, 1}}}}},
      {4, 4, {{{{2, -1}}, {{2, -1}}}, {{{2, 1}}, {{2, -1}}}}},
      {6, 8, {{{{4, -1}, {6, -1}}, {{4, 1}, {6, 1}}}, {{{0, -1}, {2, -1}}, {{0, -1}, {2, -1}}}}},
      {8, 16,
       {{{{2, 1}, {4, 1}, {6, 1}}, {{2, 1}, {4, 1}, {6, 1}}},
        {{{2, -1}, {4, -1}, {6, -1}}, {{2, 1}, {4, 1}, {6, 1}}}}},
      {10, 32,
       {{{{4, 1}, {6, 1}, {8, 2}, {10, 2}}, {{4, -1}, {6, -1}, {8, -2}, {10, -2}}},
        {{{0, 2}, {2, 2}, {4, 1}, {6, 1}}, {{0, 2}, {2, 2}, {4, 1}, {6, 1}}}}},
  };
  return rows;
}

Qr2 poly_coeff(const Poly& poly, int j) {
  for (const auto& [power, c] : poly) {
    if (power == j) return q(c);
  }
  return Qr2();
}

std::map<int, Qr2> normalized(const SojournMeasure& m) { return m.normalized.value_or(std::map<int, Qr2>{}); }

std::map<int, Qr2> over(long denom, std::vector<long> numerators) {
  std::map<int, Qr2> out;
  for (std::size_t i = 0; i < numerators.size(); ++i) out[2 * static_cast<int>(i)] = q(numerators[i], denom);
  return out;
}

void expect_measure(Verdict& v, const std::string& label, const std::map<int, Qr2>& expected,
                    const std::map<int, Qr2>& actual) {
  ++v.checked;
  if (expected != actual) v.fail(label + " differs");
}

// Golden file bytes against the pretty-printed computed document.
void expect_golden_bytes(Verdict& v, const std::string& file) {
  for (const auto& doc : golden_documents()) {
    if (doc.file != file) continue;
    std::ifstream in(default_golden_dir() / file, std::ios::binary);
    std::stringstream bytes;
    bytes << in.rdbuf();
    ++v.checked;
    if (!in || bytes.str() != doc.computed.dump(2) + "\n") v.fail(file + " not byte-identical");
    return;
  }
  v.fail(file + " unknown");
}

// ---------------------------------------------------------------------------

void ac1(Verdict& v) {
  auto start = std::chrono::steady_clock::now();
  Theorem1Series shown = theorem1_series(8);
  for (const auto& row : theorem1_rows_expected()) {
    const BiSeries& f = shown.get(row.which);
    for (int j = 0; j <= 8; ++j) {
      Qr2 expected(0, poly_coeff(row.poly, j).rat() / Rational(2 * row.denom));
      v.checked++;
      if (f.coeff(row.z, j) != expected) {
        v.fail(std::string(1, component_name(row.which)) + " at z^" + std::to_string(row.z) + " t^" +
               std::to_string(j));
      }
    }
  }
  for (auto c : {PqrsComponent::p, PqrsComponent::q, PqrsComponent::r, PqrsComponent::s}) {
    for (int i : {0, 1, 3, 5, 7}) {
      for (int j = 0; j <= 8; ++j) {
        if (!shown.get(c).coeff(i, j).is_zero()) v.fail("odd power of z present");
      }
    }
  }
  expect_golden_bytes(v, "theorem1_z8.json");

  const int order = 24;
  SojournTable table = SojournTable::evolve(0, order);
  v.require(compare_theorem1_with_dp(theorem1_series(order), table, order));
  v.require(check_theorem1_division_free(order));
  double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (seconds >= 60) v.fail("took " + std::to_string(seconds) + " s");
  if (v.pass) v.detail << "coefficients through z^8 and DP through 2n = 24, " << seconds << " s";
}

void ac2(Verdict& v) {
  Theorem2Series shown = theorem2_series(10);
  for (const auto& row : theorem2_rows_expected()) {
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) {
        for (int t = 0; t <= 10; ++t) {
          ++v.checked;
          Qr2 expected = poly_coeff(row.entries[i][j], t) * q(1, row.denom);
          if (shown.gamma_bar(i, j).coeff(row.z, t) != expected) {
            v.fail("entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") at z^" +
                   std::to_string(row.z) + " t^" + std::to_string(t));
          }
        }
      }
    }
  }
  expect_golden_bytes(v, "theorem2_z10.json");

  // Moving the z^10 top row down to t^2 breaks mu^(10) = (2,2,1,1,2,2)/10;
  // starting it at t^4 reproduces it.
  auto mu10 = [&](bool from_t2) {
    std::map<int, Qr2> weights;
    for (int k = 0; k <= 10; k += 2) {
      Mat2 g = shown.gamma_bar.coefficient(10, k);
      if (from_t2) {
        Mat2 shifted = k == 2 ? shown.gamma_bar.coefficient(10, 4) : (k == 4 ? Mat2::zero() : g);
        g = Mat2(shifted(0, 0), shifted(0, 1), g(1, 0), g(1, 1));
      }
      weights[k] = weight_b_symmetric(g);
    }
    return normalized(make_measure(10, weights));
  };
  auto expected = over(10, {2, 2, 1, 1, 2, 2});
  ++v.checked;
  if (mu10(false) != expected) v.fail("t^4 reading does not give mu^(10)");
  if (mu10(true) == expected) v.fail("t^2 reading also gives mu^(10)");

  const int order = 24;
  Theorem2Series closed = theorem2_series(order);
  v.require(compare_theorem2_with_gammas(closed, GammaTable::from_dp(SojournTable::evolve(0, order)), order, "DP"));
  v.require(compare_theorem2_with_gammas(closed, gamma_via_convolution(order), order, "convolution"));
  v.require(check_theorem2_division_free(order));
  if (v.pass) {
    v.detail << "coefficients through z^10 (top row of z^10 from t^4; t^2 reading gives mu^(10) = ";
    bool first = true;
    for (const auto& [k, p] : mu10(true)) {
      v.detail << (first ? "" : ", ") << p.to_string();
      first = false;
    }
    v.detail << "), DP and convolution through 2n = 24";
  }
}

void ac3(Verdict& v) {
  const auto& b = hadamard_basis();
  SojournTable t = SojournTable::evolve(0, 4);
  Qr2 w(0, Rational(1, 4));
  auto expect = [&](const std::string& label, const Mat2& expected, const Mat2& actual) {
    ++v.checked;
    if (expected != actual) v.fail(label);
  };
  expect("Psi^0_4(0)", (b.p * Qr2(3) + b.s) * w, t.psi(4, 0));
  expect("Psi^0_4(2)", (b.r + b.q + b.s - b.p) * w, t.psi(4, 2));
  expect("Psi^0_4(4)", (b.r - b.q * Qr2(3)) * w, t.psi(4, 4));
  expect("Gamma_2(0)", b.q * b.p, t.gamma(2, 0));
  expect("Gamma_2(2)", b.p * b.q, t.gamma(2, 2));
  expect("Gamma_4(2)", b.q * b.p * b.p * b.q + b.p * b.q * b.q * b.p, t.gamma(4, 2));
  expect_golden_bytes(v, "psi0_4.json");
  expect_golden_bytes(v, "gamma_2_4.json");
  expect_golden_bytes(v, "pqrs_table.json");
  if (v.pass) v.detail << "operators and golden bytes";
}

void ac4(Verdict& v) {
  SojournTable t = SojournTable::evolve(0, 14);
  QubitState phi = QubitState::phi_star();
  expect_measure(v, "Q(A_4)", over(8, {5, 2, 5}), sojourn_measure_a(t, 4, phi).weights);
  expect_measure(v, "m^(2)", over(2, {1, 1}), normalized(sojourn_measure_a(t, 2, phi)));
  expect_measure(v, "m^(4)", over(12, {5, 2, 5}), normalized(sojourn_measure_a(t, 4, phi)));
  expect_measure(v, "m^(6)", over(26, {10, 3, 3, 10}), normalized(sojourn_measure_a(t, 6, phi)));
  expect_measure(v, "m^(8)", over(196, {73, 24, 2, 24, 73}), normalized(sojourn_measure_a(t, 8, phi)));
  expect_measure(v, "Q(B_2)", over(4, {1, 1}), sojourn_measure_b(t, 2, phi).weights);
  expect_measure(v, "Q(B_4)", over(8, {0, 1, 0}), sojourn_measure_b(t, 4, phi).weights);
  expect_measure(v, "Q(B_6)", over(64, {1, 1, 1, 1}), sojourn_measure_b(t, 6, phi).weights);
  expect_measure(v, "mu^(2)", over(2, {1, 1}), normalized(sojourn_measure_b(t, 2, phi)));
  expect_measure(v, "mu^(4)", over(1, {0, 1, 0}), normalized(sojourn_measure_b(t, 4, phi)));
  expect_measure(v, "mu^(6)", over(4, {1, 1, 1, 1}), normalized(sojourn_measure_b(t, 6, phi)));
  expect_measure(v, "mu^(8)", over(3, {0, 1, 1, 1, 0}), normalized(sojourn_measure_b(t, 8, phi)));
  expect_measure(v, "mu^(10)", over(10, {2, 2, 1, 1, 2, 2}), normalized(sojourn_measure_b(t, 10, phi)));
  expect_measure(v, "mu^(12)", over(5, {0, 1, 1, 1, 1, 1, 0}), normalized(sojourn_measure_b(t, 12, phi)));
  expect_measure(v, "mu^(14)", over(152, {25, 25, 13, 13, 13, 13, 25, 25}), normalized(sojourn_measure_b(t, 14, phi)));
  for (const char* f : {"measure_a.json", "measure_a_n4.json", "measure_b.json", "measure_b_weights.json"}) {
    expect_golden_bytes(v, f);
  }
  if (v.pass) v.detail << "Q(A_4), m^(2..8), Q(B_2,4,6), mu^(2..14)";
}

void ac5(Verdict& v) {
  SojournTable t = SojournTable::evolve(0, 20);
  for (int n = 1; n <= 5; ++n) v.require(uniform_bridge_check(t, n));
  if (v.pass) v.detail << "mu^(4n) uniform on {2, ..., 4n-2} for n = 1..5";
}

void ac6(Verdict& v) {
  expect_measure(v, "m^(2:c)", over(2, {1, 1}), normalized(classical_arcsine(2)));
  expect_measure(v, "m^(4:c)", over(8, {3, 2, 3}), normalized(classical_arcsine(4)));
  expect_measure(v, "m^(6:c)", over(16, {5, 3, 3, 5}), normalized(classical_arcsine(6)));
  expect_measure(v, "m^(8:c)", over(128, {35, 20, 18, 20, 35}), normalized(classical_arcsine(8)));
  expect_golden_bytes(v, "arcsine.json");
  v.require(classical_gf_check(10));
  for (int n = 2; n <= 12; n += 2) {
    std::map<int, long> counts;
    long bridges = 0;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      int x = 0;
      int k = 0;
      for (int step = 0; step < n; ++step) {
        int next = ((mask >> step) & 1u) ? x + 1 : x - 1;
        k += counted_interval(x, next);
        x = next;
      }
      if (x == 0) {
        ++bridges;
        ++counts[k];
      }
    }
    std::map<int, Qr2> observed;
    for (const auto& [k, c] : counts) observed[k] = q(c, bridges);
    expect_measure(v, "equidistribution at " + std::to_string(n), normalized(classical_equidistribution(n)), observed);
  }
  if (v.pass) v.detail << "arc-sine 2n = 2..8 (6: 5/16), generating function n <= 10, bridges 2n <= 12";
}

void ac7(Verdict& v) {
  v.require(check_first_step_equations(-5, 5, 12));
  v.require(check_three_term_recurrences(-5, 5, 12));
  if (v.pass) v.detail << v.checked << " coefficients on x in [-5, 5], order 12";
}

void ac8(Verdict& v) {
  v.require(x_matrix_check(12));
  if (v.pass) v.detail << "X(I - X)^-1 entrywise to order 12";
}

void ac9(Verdict& v) {
  using namespace sojourn::testing;
  SojournTable t = SojournTable::evolve(0, 24);
  std::vector<QubitState> states = symmetric_states();
  states.emplace_back(QrComplex{q(3, 5), 0}, QrComplex{0, q(4, 5)});
  states.emplace_back(QrComplex{1, 0}, QrComplex{0, 0});
  for (const auto& phi : states) {
    for (int n = 0; n <= 24; ++n) {
      Qr2 total;
      for (const auto& [x, p] : position_distribution(t, n, phi)) total += p;
      ++v.checked;
      if (total != Qr2(1)) v.fail("unitarity at n = " + std::to_string(n));
    }
  }
  for (int n = 1; n <= 24; ++n) {
    auto d = position_distribution(t, n, QubitState::phi_star());
    for (const auto& [x, p] : d) {
      if (d.at(-x) != p) v.fail("asymmetric position distribution at n = " + std::to_string(n));
    }
  }
  for (int x0 : {-2, 0, 1}) {
    SojournTable s = SojournTable::evolve(x0, 10);
    for (int n = 1; n <= 10; ++n) {
      auto paths = enumerate_paths(x0, n);
      for (int y = x0 - n; y <= x0 + n; ++y) {
        for (int k = 0; k <= n; ++k) {
          auto it = paths.find({y, k});
          ++v.checked;
          if (s.at(n, y, k) != (it == paths.end() ? Mat2::zero() : it->second)) v.fail("DP vs enumeration");
        }
      }
    }
  }
  std::mt19937 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    BiSeries f = random_unit_series(rng, 6, 6);
    BiSeries g = random_unit_series(rng, 6, 6);
    ++v.checked;
    if (series_div(series_mul(f, g), g) != f) v.fail("div(mul(f, g), g) != f");
    BiSeries r = series_sqrt(f);
    if (r * r != f) v.fail("sqrt(f)^2 != f");
  }
  for (int trial = 0; trial < 300; ++trial) {
    Qr2 a = random_qr2(rng), b = random_qr2(rng), c = random_qr2(rng);
    ++v.checked;
    bool ok = (a + b) + c == a + (b + c) && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
              a * b == b * a && (a.is_zero() || a * a.inverse() == Qr2(1));
    if (!ok) v.fail("ring axiom");
  }
  if (v.pass) v.detail << v.checked << " property checks";
}

void ac10(Verdict& v) {
  SojournTable t = SojournTable::evolve(0, 16);
  auto states = sojourn::testing::symmetric_states();
  for (const auto& phi : states) {
    if (!phi.is_symmetric()) v.fail("grid state not symmetric");
    for (int n = 2; n <= 16; n += 2) {
      for (int k = 0; k <= n; k += 2) {
        PqrsCoeffs c = pqrs_decompose(t.psi(n, k));
        const Mat2& g = t.gamma(n, k);
        v.checked += 2;
        if (weight_a(c, phi) != weight_a_symmetric(c)) v.fail("free-walk weight at n = " + std::to_string(n));
        if (weight_b(g, phi) != weight_b_symmetric(g)) v.fail("bridge weight at n = " + std::to_string(n));
      }
    }
  }
  if (v.pass) v.detail << states.size() << " symmetric states, n <= 16";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"AC1 Theorem 1 expansion", ac1},     {"AC2 Theorem 2 expansion", ac2},
      {"AC3 explicit operators", ac3},      {"AC4 sojourn measures", ac4},
      {"AC5 uniform bridge measure", ac5},  {"AC6 classical baselines", ac6},
      {"AC7 recurrences in x", ac7},        {"AC8 X(I - X)^-1", ac8},
      {"AC9 property suites", ac9},         {"AC10 symmetric-state reduction", ac10},
  };
  int failed = 0;
  for (const auto& [name, body] : criteria) {
    Verdict v;
    try {
      body(v);
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "PASS " : "FAIL ") << name << ": " << v.detail.str() << std::endl;
  }
  return failed;
}
