#include "sojourn/pqrs.hpp"

namespace sojourn {

CoinSplit coin_split(const Mat2& coin) {
  return {Mat2(coin(0, 0), coin(0, 1), 0, 0), Mat2(0, 0, coin(1, 0), coin(1, 1))};
}

const PqrsBasis& hadamard_basis() {
  static const PqrsBasis basis = [] {
    Qr2 h = Qr2::inv_sqrt2();
    auto [p, q] = coin_split(Mat2::hadamard());
    return PqrsBasis{p, q, Mat2(h, -h, 0, 0), Mat2(0, 0, h, h)};
  }();
  return basis;
}

const Qr2& component(const PqrsCoeffs& c, PqrsComponent which) {
  switch (which) {
    case PqrsComponent::p: return c.p;
    case PqrsComponent::q: return c.q;
    case PqrsComponent::r: return c.r;
    case PqrsComponent::s: return c.s;
  }
  return c.p;
}

char component_name(PqrsComponent which) {
  switch (which) {
    case PqrsComponent::p: return 'p';
    case PqrsComponent::q: return 'q';
    case PqrsComponent::r: return 'r';
    case PqrsComponent::s: return 's';
  }
  return '?';
}

PqrsCoeffs pqrs_decompose(const Mat2& m) {
  const auto& b = hadamard_basis();
  return {inner_product(b.p, m), inner_product(b.q, m), inner_product(b.r, m),
          inner_product(b.s, m)};
}

Mat2 pqrs_compose(const PqrsCoeffs& c) {
  const auto& b = hadamard_basis();
  return b.p * c.p + b.q * c.q + b.r * c.r + b.s * c.s;
}

}  // namespace sojourn
