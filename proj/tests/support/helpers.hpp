#pragma once

#include <cmath>
#include <random>

#include "qsp/qmatrix.hpp"

namespace qsp::test {

/// Independent Hamilton-product oracle: expands all 16 component products
/// through the basis multiplication table, never through the closed form the
/// library uses.
inline Quaternion mul_oracle(const Quaternion& a, const Quaternion& b) {
  // basis_table[x][y] = (sign, component) of e_x * e_y with e = (1, i, j, k)
  struct Cell {
    int sign;
    int comp;
  };
  static constexpr Cell basis_table[4][4] = {
      {{1, 0}, {1, 1}, {1, 2}, {1, 3}},
      {{1, 1}, {-1, 0}, {1, 3}, {-1, 2}},
      {{1, 2}, {-1, 3}, {-1, 0}, {1, 1}},
      {{1, 3}, {1, 2}, {-1, 1}, {-1, 0}}};
  const double ac[4] = {a.r, a.i, a.j, a.k};
  const double bc[4] = {b.r, b.i, b.j, b.k};
  double out[4] = {0, 0, 0, 0};
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      const Cell cell = basis_table[x][y];
      out[cell.comp] += cell.sign * ac[x] * bc[y];
    }
  return {out[0], out[1], out[2], out[3]};
}

/// ||a - b|| <= tol * max(1, ||b||): relative for O(1) values, absolute near 0.
inline bool close(const Quaternion& a, const Quaternion& b, double tol = 1e-12) {
  return norm(a - b) <= tol * std::max(1.0, norm(b));
}

inline bool close(double a, double b, double tol = 1e-12) {
  return std::abs(a - b) <= tol * std::max(1.0, std::abs(b));
}

class Rng {
 public:
  explicit Rng(unsigned long long seed) : gen_(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(gen_);
  }

  int uniform_int(int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(gen_);
  }

  double gaussian(double sigma = 1.0) {
    // Box-Muller on the raw engine keeps trajectories reproducible.
    for (;;) {
      const double u1 = uniform(0.0, 1.0);
      const double u2 = uniform(0.0, 1.0);
      if (u1 <= 1e-300) continue;
      return sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
  }

  Quaternion quaternion(double lo = -2.0, double hi = 2.0) {
    return {uniform(lo, hi), uniform(lo, hi), uniform(lo, hi), uniform(lo, hi)};
  }

  /// Zero-mean Gaussian quaternion with independent equal-power components
  /// and E||q||^2 == power.
  Quaternion proper_gaussian(double power = 1.0) {
    const double sigma = std::sqrt(power / 4.0);
    return {gaussian(sigma), gaussian(sigma), gaussian(sigma), gaussian(sigma)};
  }

  QVector signal(std::size_t n, double lo = -2.0, double hi = 2.0) {
    QVector out(n);
    for (Quaternion& q : out) q = quaternion(lo, hi);
    return out;
  }

  QVector proper_signal(std::size_t n, double power = 1.0) {
    QVector out(n);
    for (Quaternion& q : out) q = proper_gaussian(power);
    return out;
  }

  std::mt19937_64& engine() { return gen_; }

 private:
  std::mt19937_64 gen_;
};

}  // namespace qsp::test
