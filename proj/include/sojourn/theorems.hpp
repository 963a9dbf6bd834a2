#pragma once

#include <array>
#include <vector>

#include "sojourn/bi_series.hpp"
#include "sojourn/pqrs.hpp"
#include "sojourn/report.hpp"
#include "sojourn/walk_paths.hpp"

namespace sojourn {

/// 2x2 matrix whose entries are truncated series.
class SeriesMat2 {
 public:
  SeriesMat2(BiSeries e00, BiSeries e01, BiSeries e10, BiSeries e11)
      : e_{std::move(e00), std::move(e01), std::move(e10), std::move(e11)} {}

  static SeriesMat2 identity(int trunc_z, int trunc_t);

  const BiSeries& operator()(int i, int j) const { return e_[2 * i + j]; }
  BiSeries& operator()(int i, int j) { return e_[2 * i + j]; }

  int trunc_z() const;
  int trunc_t() const;
  /// Coefficient matrix of z^i t^j.
  Mat2 coefficient(int i, int j) const;

  friend SeriesMat2 operator+(const SeriesMat2& a, const SeriesMat2& b);
  friend SeriesMat2 operator-(const SeriesMat2& a, const SeriesMat2& b);
  friend SeriesMat2 operator*(const SeriesMat2& a, const SeriesMat2& b);

 private:
  std::array<BiSeries, 4> e_;
};

/// Inverse through adjugate / determinant; the determinant must be a unit.
SeriesMat2 inverse(const SeriesMat2& m);

/// Numerator and denominator of one closed-form generating function.
struct SeriesQuotient {
  BiSeries num;
  BiSeries den;
};

/// Closed-form generating functions of the even-time, even-count PQRS
/// coefficients u^0_{2n}(2k), u in {p, q, r, s}, with A = sqrt(1 + z^4) and
/// B = sqrt(1 + z^4 t^4).
struct Theorem1Series {
  BiSeries p_bar;
  BiSeries q_bar;
  BiSeries r_bar;
  BiSeries s_bar;

  const BiSeries& get(PqrsComponent which) const;
};

/// The four quotients at the given working order, before division.
std::array<SeriesQuotient, 4> theorem1_quotients(int working_order);
/// Expansions truncated to z^order, t^order. Throws for order < 2.
Theorem1Series theorem1_series(int order);

/// Entrywise generating function of Gamma_{2n}(2k) as (1/C) times a matrix
/// of series, C = -1 - (z^2 - A)(z^2 t^2 - B).
struct Theorem2Series {
  SeriesMat2 gamma_bar;
};

/// Numerator matrix and C at the given working order.
std::pair<SeriesMat2, BiSeries> theorem2_numerator_and_c(int order);
Theorem2Series theorem2_series(int order);

/// Coefficients a_n of (-1 - z^2 + sqrt(1 + z^4)) / z, the amplitudes of the
/// first return to the origin.
struct FirstReturnAmplitudes {
  std::vector<Rational> a;  // a[0] is unused and zero

  int n_max() const { return static_cast<int>(a.size()) - 1; }
  const Rational& at(int n) const;
  /// First-return block over 2r steps spent on the positive side:
  /// (a_{2r-1}/2) [[-1, 1], [0, 0]].
  Mat2 positive_excursion(int r) const;
  /// First-return block over 2r steps on the non-positive side:
  /// (a_{2r-1}/2) [[0, 0], [-1, -1]].
  Mat2 negative_excursion(int r) const;
};

FirstReturnAmplitudes first_return_amplitudes(int n_max);

/// Gamma_n(k) for 0 <= n <= n_max, 0 <= k <= n.
class GammaTable {
 public:
  explicit GammaTable(int n_max);
  static GammaTable from_dp(const SojournTable& table);

  int n_max() const { return n_max_; }
  const Mat2& at(int n, int k) const;
  void set(int n, int k, Mat2 value);

 private:
  int n_max_;
  std::vector<std::vector<Mat2>> rows_;
};

/// Bridge path sums from the first-excursion decomposition alone: each bridge
/// is an excursion of 2r steps followed by a shorter bridge. Requires an even
/// n_max; independent of the path DP.
GammaTable gamma_via_convolution(int n_max);

/// X = sum_r [positive_excursion(r) (zt)^{2r} + negative_excursion(r) z^{2r}],
/// in closed form.
SeriesMat2 x_matrix(int order);
/// X (I - X)^{-1} against theorem2_series, entrywise.
CheckReport x_matrix_check(int order);

/// u~^x(z, t) = sum_{n>=1,k} u^x_n(k) z^n t^k from a DP table started at x.
BiSeries dp_component_series(const SojournTable& table, PqrsComponent which, int order);
/// Generating series of one entry of a Gamma table.
BiSeries gamma_entry_series(const GammaTable& gammas, int i, int j, int order);

/// Theorem 1 closed forms against the even part of the DP series from 0.
CheckReport compare_theorem1_with_dp(const Theorem1Series& closed, const SojournTable& table, int order);
/// numerator == (DP series) * denominator, with no division involved.
CheckReport check_theorem1_division_free(int order);
/// Theorem 2 closed form against a Gamma table (DP or convolution).
CheckReport compare_theorem2_with_gammas(const Theorem2Series& closed, const GammaTable& gammas,
                                         int order, const std::string& side);
CheckReport check_theorem2_division_free(int order);
/// The z^{4n} part of Gamma-bar equals (1/2) b_n (t^2 + ... + t^{4n-2})
/// [[-1, -1], [1, -1]] with sqrt(1 + z) = sum b_n z^n.
CheckReport check_fourn_subseries(const Theorem2Series& closed, int order);

/// First-step functional equations for u~^x at every x in [x_min, x_max],
/// instantiated at the Hadamard coin. Requires x_min <= -1 and x_max >= 1.
CheckReport check_first_step_equations(int x_min, int x_max, int order);
/// Three-term recurrences in x, multiplied through by z (x <= -2) or zt
/// (x >= 0).
CheckReport check_three_term_recurrences(int x_min, int x_max, int order);

}  // namespace sojourn
