#pragma once

#include <map>
#include <optional>
#include <vector>

#include "sojourn/pqrs.hpp"
#include "sojourn/report.hpp"
#include "sojourn/walk_paths.hpp"

namespace sojourn {

/// Sojourn-time measure at even time n over the even counts k = 0, 2, ..., n.
/// weights are the unnormalized values ||M phi||^2; they need not sum to 1.
struct SojournMeasure {
  int n = 0;
  std::map<int, Qr2> weights;
  /// weights / total; empty when the total weight is zero.
  std::optional<std::map<int, Qr2>> normalized;

  Qr2 total() const;
};

/// Attaches the normalized distribution to a weight map.
SojournMeasure make_measure(int n, std::map<int, Qr2> weights);

/// Free-walk weight from PQRS coefficients for an arbitrary unit state:
/// (1/2)(p^2+r^2+q^2+s^2) + (pr+qs)(|a|^2-|b|^2) + (1/2)(p^2-r^2-q^2+s^2)(a b* + a* b).
Qr2 weight_a(const PqrsCoeffs& c, const QubitState& phi);
/// Symmetric-state form (1/2)(p^2 + r^2 + q^2 + s^2).
Qr2 weight_a_symmetric(const PqrsCoeffs& c);
/// Bridge weight from the entries of Gamma for an arbitrary unit state.
Qr2 weight_b(const Mat2& gamma, const QubitState& phi);
/// Symmetric-state form (1/2) sum_ij Gamma_ij^2.
Qr2 weight_b_symmetric(const Mat2& gamma);

/// A-measure: free walk from the origin, n even and within the table depth.
SojournMeasure sojourn_measure_a(const SojournTable& table, int n, const QubitState& phi);
SojournMeasure sojourn_measure_a(int n, const QubitState& phi);
/// B-measure: bridge walk returning to the origin at time n.
SojournMeasure sojourn_measure_b(const SojournTable& table, int n, const QubitState& phi);
SojournMeasure sojourn_measure_b(int n, const QubitState& phi);

/// Discrete arc-sine law (1/2)^n C(k, k/2) C(n-k, (n-k)/2) over even k.
SojournMeasure classical_arcsine(int n);
/// Uniform 1/(n/2 + 1) on {0, 2, ..., n}; n even and >= 2.
SojournMeasure classical_equidistribution(int n);

/// The normalized bridge measure at time 4n is uniform on {2, 4, ..., 4n-2}.
CheckReport uniform_bridge_check(int n);
CheckReport uniform_bridge_check(const SojournTable& table, int n);

/// Coefficients of 1/(sqrt(1 - z^2) sqrt(1 - z^2 t^2)) at z^{2n} t^{2k} against
/// the arc-sine binomial formula, for n <= n_max.
CheckReport classical_gf_check(int n_max);

struct CentralTermComparison {
  int n = 0;
  std::vector<int> central_ks;
  Qr2 quantum;
  Qr2 classical;
  bool quantum_smaller = false;
};

/// Central term(s) of the normalized A-measure under phi* against the
/// arc-sine law; n even and >= 4.
CentralTermComparison compare_central_terms(int n);

}  // namespace sojourn
