#pragma once

#include <array>

#include "qsp/quaternion.hpp"

namespace qsp {

/// One of the three canonical imaginary units.
enum class Axis { i, j, k };

constexpr Quaternion unit(Axis a) {
  switch (a) {
    case Axis::i: return q_i;
    case Axis::j: return q_j;
    default: return q_k;
  }
}

constexpr char axis_name(Axis a) {
  switch (a) {
    case Axis::i: return 'i';
    case Axis::j: return 'j';
    default: return 'k';
  }
}

/// Involution around an arbitrary nonzero quaternion: zeta * q * zeta^-1.
/// For a pure unit zeta this rotates the imaginary part of q by pi about
/// zeta while leaving the real part untouched, and is its own inverse.
inline Quaternion involution(const Quaternion& q, const Quaternion& zeta) {
  if (norm_sq(zeta) == 0.0) throw std::domain_error("involution: zeta must be nonzero");
  return zeta * q * inverse(zeta);
}

/// Canonical involutions use exact sign flips so that golden tests can rely
/// on strict equality.
constexpr Quaternion involution(const Quaternion& q, Axis a) {
  switch (a) {
    case Axis::i: return {q.r, q.i, -q.j, -q.k};
    case Axis::j: return {q.r, -q.i, q.j, -q.k};
    default: return {q.r, -q.i, -q.j, q.k};
  }
}

/// Real components recovered through the involution combinations
///   q_r = (q + q^i + q^j + q^k) / 4,       q_i = (q + q^i - q^j - q^k) / (4i),
///   q_j = (q - q^i + q^j - q^k) / (4j),    q_k = (q - q^i - q^j + q^k) / (4k).
/// Sums are grouped pairwise so every intermediate is exact and the result
/// agrees with direct field reads exactly.
inline std::array<double, 4> components_via_involutions(const Quaternion& q) {
  const Quaternion qi = involution(q, Axis::i);
  const Quaternion qj = involution(q, Axis::j);
  const Quaternion qk = involution(q, Axis::k);
  const Quaternion a = q + qi, b = qj + qk;  // (2r, 2i, 0, 0), (2r, -2i, 0, 0)
  const Quaternion c = q - qi, d = qj - qk;  // (0, 0, 2j, 2k), (0, 0, 2j, -2k)
  const Quaternion cr = (a + b) * 0.25;
  const Quaternion ci = (-q_i * 0.25) * (a - b);
  const Quaternion cj = (-q_j * 0.25) * (c + d);
  const Quaternion ck = (-q_k * 0.25) * (c - d);
  return {cr.r, ci.r, cj.r, ck.r};
}

/// q* = (q^i + q^j + q^k - q) / 2, grouped pairwise; equals conj(q) exactly.
constexpr Quaternion conj_via_involutions(const Quaternion& q) {
  const Quaternion s =
      (involution(q, Axis::j) + involution(q, Axis::k)) + (involution(q, Axis::i) - q);
  return s * 0.5;
}

/// Signed component along a canonical axis.
constexpr double component(const Quaternion& q, Axis a) {
  switch (a) {
    case Axis::i: return q.i;
    case Axis::j: return q.j;
    default: return q.k;
  }
}

}  // namespace qsp
