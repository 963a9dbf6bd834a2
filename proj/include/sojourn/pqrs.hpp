#pragma once

#include "sojourn/mat2.hpp"

namespace sojourn {

/// U = left + right, where left keeps U's top row (a step to x - 1) and right
/// keeps the bottom row (a step to x + 1).
struct CoinSplit {
  Mat2 left;
  Mat2 right;
};

CoinSplit coin_split(const Mat2& coin);

/// The Hadamard basis P, Q, R, S. Orthonormal under the trace inner product.
struct PqrsBasis {
  Mat2 p;
  Mat2 q;
  Mat2 r;
  Mat2 s;
};

const PqrsBasis& hadamard_basis();

struct PqrsCoeffs {
  Qr2 p;
  Qr2 q;
  Qr2 r;
  Qr2 s;

  friend bool operator==(const PqrsCoeffs&, const PqrsCoeffs&) = default;
};

enum class PqrsComponent { p, q, r, s };

const Qr2& component(const PqrsCoeffs& c, PqrsComponent which);
char component_name(PqrsComponent which);

PqrsCoeffs pqrs_decompose(const Mat2& m);
Mat2 pqrs_compose(const PqrsCoeffs& c);

}  // namespace sojourn
