#include "sojourn/walk_paths.hpp"

#include <stdexcept>
#include <string>

#include "sojourn/pqrs.hpp"

namespace sojourn {

QubitState::QubitState(QrComplex alpha, QrComplex beta)
    : alpha_(std::move(alpha)), beta_(std::move(beta)) {
  if (alpha_.norm_squared() + beta_.norm_squared() != Qr2(1)) {
    throw std::invalid_argument("qubit state is not normalized: |alpha|^2 + |beta|^2 = " +
                                (alpha_.norm_squared() + beta_.norm_squared()).to_string());
  }
}

QubitState QubitState::phi_star() {
  Qr2 h = Qr2::inv_sqrt2();
  return QubitState({h, 0}, {0, h});
}

Qr2 QubitState::population_difference() const {
  return alpha_.norm_squared() - beta_.norm_squared();
}

Qr2 QubitState::coherence() const {
  QrComplex c = alpha_ * beta_.conj();
  return 2 * c.re;
}

bool QubitState::is_symmetric() const {
  Qr2 half(Rational(1, 2));
  return alpha_.norm_squared() == half && beta_.norm_squared() == half && coherence().is_zero();
}

Qr2 norm_squared(const Mat2& m, const QubitState& phi) {
  Qr2 total;
  for (int i = 0; i < 2; ++i) {
    QrComplex row = m(i, 0) * phi.alpha() + m(i, 1) * phi.beta();
    total += row.norm_squared();
  }
  return total;
}

SojournTable::SojournTable(int start, int n_max)
    : start_(start),
      n_max_(n_max),
      entries_(static_cast<std::size_t>(n_max + 1) * (2 * n_max + 1) * (n_max + 1)) {}

bool SojournTable::in_range(int n, int y, int k) const {
  int dy = y - start_;
  return n >= 0 && n <= n_max_ && dy >= -n && dy <= n && k >= 0 && k <= n;
}

std::size_t SojournTable::index(int n, int y, int k) const {
  auto width_y = static_cast<std::size_t>(2 * n_max_ + 1);
  auto width_k = static_cast<std::size_t>(n_max_ + 1);
  return (static_cast<std::size_t>(n) * width_y + static_cast<std::size_t>(y - start_ + n_max_)) *
             width_k +
         static_cast<std::size_t>(k);
}

SojournTable SojournTable::evolve(int start, int n_max, const Mat2& coin) {
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative, got " + std::to_string(n_max));
  auto [left, right] = coin_split(coin);
  SojournTable table(start, n_max);
  table.entries_[table.index(0, start, 0)] = Mat2::identity();
  for (int n = 0; n < n_max; ++n) {
    for (int y = start - n; y <= start + n; y += 2) {
      for (int k = 0; k <= n; ++k) {
        const Mat2& m = table.entries_[table.index(n, y, k)];
        if (m.is_zero()) continue;
        int y_left = y - 1;
        int y_right = y + 1;
        table.entries_[table.index(n + 1, y_left, k + counted_interval(y, y_left))] += left * m;
        table.entries_[table.index(n + 1, y_right, k + counted_interval(y, y_right))] += right * m;
      }
    }
  }
  return table;
}

const Mat2& SojournTable::at(int n, int y, int k) const {
  static const Mat2 kZero;
  if (!in_range(n, y, k)) return kZero;
  return entries_[index(n, y, k)];
}

Mat2 SojournTable::psi(int n, int k) const {
  if (n < 0 || n > n_max_) {
    throw std::out_of_range("time " + std::to_string(n) + " beyond table depth " + std::to_string(n_max_));
  }
  Mat2 sum;
  if (k < 0 || k > n) return sum;
  for (int y = start_ - n; y <= start_ + n; y += 2) sum += entries_[index(n, y, k)];
  return sum;
}

Mat2 SojournTable::endpoint_operator(int n, int y) const {
  if (n < 0 || n > n_max_) {
    throw std::out_of_range("time " + std::to_string(n) + " beyond table depth " + std::to_string(n_max_));
  }
  Mat2 sum;
  for (int k = 0; k <= n; ++k) sum += at(n, y, k);
  return sum;
}

const Mat2& SojournTable::gamma(int n, int k) const {
  if (start_ != 0) throw std::logic_error("gamma requires a table started at the origin");
  if (n < 0 || n > n_max_) {
    throw std::out_of_range("time " + std::to_string(n) + " beyond table depth " + std::to_string(n_max_));
  }
  return at(n, 0, k);
}

std::map<int, Qr2> position_distribution(const SojournTable& table, int n, const QubitState& phi) {
  if (table.start() != 0) throw std::logic_error("position distribution requires a walk from the origin");
  std::map<int, Qr2> dist;
  for (int y = -n; y <= n; y += 2) dist[y] = norm_squared(table.endpoint_operator(n, y), phi);
  return dist;
}

std::map<int, Qr2> position_distribution(int n, const QubitState& phi) {
  return position_distribution(SojournTable::evolve(0, n), n, phi);
}

}  // namespace sojourn
