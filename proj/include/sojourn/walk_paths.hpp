#pragma once

#include <map>
#include <vector>

#include "sojourn/mat2.hpp"

namespace sojourn {

/// Number of sojourn intervals contributed by the step from -> to: the
/// interval is on the positive side when max(from, to) >= 1.
constexpr int counted_interval(int from, int to) { return (from > to ? from : to) >= 1 ? 1 : 0; }

/// Complex number with real and imaginary parts in Q(sqrt 2).
struct QrComplex {
  Qr2 re;
  Qr2 im;

  Qr2 norm_squared() const { return re * re + im * im; }
  QrComplex conj() const { return {re, -im}; }

  friend QrComplex operator+(const QrComplex& a, const QrComplex& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend QrComplex operator*(const QrComplex& a, const QrComplex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend QrComplex operator*(const Qr2& s, const QrComplex& a) { return {s * a.re, s * a.im}; }
  friend bool operator==(const QrComplex&, const QrComplex&) = default;
};

/// Initial chirality state T[alpha, beta] with |alpha|^2 + |beta|^2 = 1 exactly.
class QubitState {
 public:
  /// Throws std::invalid_argument unless the state has unit norm.
  QubitState(QrComplex alpha, QrComplex beta);

  /// T[1/sqrt 2, i/sqrt 2], the symmetric Hadamard initial state.
  static QubitState phi_star();

  const QrComplex& alpha() const { return alpha_; }
  const QrComplex& beta() const { return beta_; }

  /// |alpha|^2 - |beta|^2.
  Qr2 population_difference() const;
  /// alpha*conj(beta) + conj(alpha)*beta, always real.
  Qr2 coherence() const;
  /// |alpha| = |beta| = 1/sqrt 2 and the coherence vanishes.
  bool is_symmetric() const;

 private:
  QrComplex alpha_;
  QrComplex beta_;
};

/// ||M phi||^2 for a real operator M.
Qr2 norm_squared(const Mat2& m, const QubitState& phi);

/// Operator path sums Psi^{x -> y}_n(k) for every n <= n_max from a fixed
/// start x, keyed by endpoint y and sojourn count k. Later steps multiply on
/// the left, so the path x -> x-1 -> x contributes Q P.
class SojournTable {
 public:
  /// Throws std::invalid_argument for negative n_max.
  static SojournTable evolve(int start, int n_max, const Mat2& coin = Mat2::hadamard());

  int start() const { return start_; }
  int n_max() const { return n_max_; }

  /// Psi^{start -> y}_n(k); the zero matrix outside the reachable cone.
  const Mat2& at(int n, int y, int k) const;
  /// Psi^start_n(k) = sum over endpoints.
  Mat2 psi(int n, int k) const;
  /// Sum over k: the plain n-step operator from start to y.
  Mat2 endpoint_operator(int n, int y) const;
  /// Gamma_n(k) = Psi^{0 -> 0}_n(k); requires start 0.
  const Mat2& gamma(int n, int k) const;

 private:
  SojournTable(int start, int n_max);
  std::size_t index(int n, int y, int k) const;
  bool in_range(int n, int y, int k) const;

  int start_;
  int n_max_;
  std::vector<Mat2> entries_;
};

/// P(X_n = x) = ||Xi phi||^2 for a walk started at the origin, for every
/// reachable x.
std::map<int, Qr2> position_distribution(const SojournTable& table, int n, const QubitState& phi);
std::map<int, Qr2> position_distribution(int n, const QubitState& phi);

}  // namespace sojourn
