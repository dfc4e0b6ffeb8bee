#pragma once

#include <vector>

#include "qsp/qmatrix.hpp"

namespace qsp {

/// A length-n quaternion vector split into its four real component vectors.
struct Quadrivariate {
  std::vector<double> r, i, j, k;

  std::size_t size() const { return r.size(); }
};

/// The 4n stack [q; q^i; q^j; q^k] kept together with the vector it came from.
struct AugmentedVector {
  QVector base;   // length n
  QVector stack;  // length 4n
};

inline AugmentedVector augment(const QVector& v) {
  AugmentedVector out;
  out.base = v;
  out.stack.reserve(4 * v.size());
  for (const Quaternion& q : v) out.stack.push_back(q);
  for (const Quaternion& q : v) out.stack.push_back(involution(q, Axis::i));
  for (const Quaternion& q : v) out.stack.push_back(involution(q, Axis::j));
  for (const Quaternion& q : v) out.stack.push_back(involution(q, Axis::k));
  return out;
}

/// Scalar convenience: the 4-stack [q, q^i, q^j, q^k].
inline QVector augment_scalar(const Quaternion& q) {
  return {q, involution(q, Axis::i), involution(q, Axis::j), involution(q, Axis::k)};
}

inline Quadrivariate to_quadrivariate(const QVector& v) {
  Quadrivariate out;
  out.r.reserve(v.size());
  out.i.reserve(v.size());
  out.j.reserve(v.size());
  out.k.reserve(v.size());
  for (const Quaternion& q : v) {
    out.r.push_back(q.r);
    out.i.push_back(q.i);
    out.j.push_back(q.j);
    out.k.push_back(q.k);
  }
  return out;
}

inline QVector from_quadrivariate(const Quadrivariate& qv) {
  const std::size_t n = qv.r.size();
  if (qv.i.size() != n || qv.j.size() != n || qv.k.size() != n)
    throw shape_error("from_quadrivariate: component lengths differ");
  QVector out(n);
  for (std::size_t t = 0; t < n; ++t) out[t] = {qv.r[t], qv.i[t], qv.j[t], qv.k[t]};
  return out;
}

/// The 4n x 4n block matrix A mapping the quadrivariate real components onto
/// the augmented stack:
///   [q; q^i; q^j; q^k] = A [q_r; q_i; q_j; q_k],
/// with block rows [I iI jI kI; I iI -jI -kI; I -iI jI -kI; I -iI -jI kI].
inline QMatrix basis_matrix(std::size_t n) {
  if (n < 1) throw shape_error("basis_matrix: n must be >= 1");
  static constexpr double sign[4][4] = {
      {1, 1, 1, 1}, {1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}};
  const Quaternion units[4] = {q_one, q_i, q_j, q_k};
  QMatrix a(4 * n, 4 * n);
  for (std::size_t br = 0; br < 4; ++br)
    for (std::size_t bc = 0; bc < 4; ++bc)
      for (std::size_t t = 0; t < n; ++t)
        a(br * n + t, bc * n + t) = units[bc] * sign[br][bc];
  return a;
}

/// A^-1 = A^H / 4.
inline QMatrix basis_inverse(std::size_t n) { return basis_matrix(n).hermitian() * 0.25; }

/// Real components embedded as quaternions, for applying the basis matrix.
inline QVector quadrivariate_stack(const Quadrivariate& qv) {
  const std::size_t n = qv.size();
  QVector out;
  out.reserve(4 * n);
  for (double x : qv.r) out.push_back(Quaternion{x});
  for (double x : qv.i) out.push_back(Quaternion{x});
  for (double x : qv.j) out.push_back(Quaternion{x});
  for (double x : qv.k) out.push_back(Quaternion{x});
  return out;
}

}  // namespace qsp
