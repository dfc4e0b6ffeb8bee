#pragma once

#include <Eigen/Dense>
#include <vector>

#include "qsp/qmatrix.hpp"

namespace qsp {

/// Complex adjoint of a quaternion matrix. Each entry q = z1 + z2 j with
/// z1 = q_r + i q_i and z2 = q_j + i q_k becomes the 2x2 block
/// [[z1, z2], [-conj(z2), conj(z1)]] in place, giving a 2m x 2n complex
/// matrix. The map is a ring homomorphism and commutes with the conjugate
/// transpose, which is what lets a complex SVD back a quaternion SVD.
Eigen::MatrixXcd complex_adjoint(const QMatrix& m);

/// Quaternion singular value decomposition M = U diag(sigma) V^H with
/// U, V having orthonormal quaternion columns and sigma nonnegative,
/// descending. Computed from the complex SVD of the adjoint: singular values
/// of the adjoint come in duplicated pairs; one complex singular vector per
/// pair is re-orthogonalised against the quaternionic structure map and read
/// back as a quaternion column.
struct Qsvd {
  QMatrix u;
  std::vector<double> sigma;
  QMatrix v;
};

Qsvd qsvd(const QMatrix& m);

QMatrix qsvd_reconstruct(const Qsvd& f);

/// ||M - (M^eta)^H||_F <= tol * ||M||_F.
bool is_eta_hermitian(const QMatrix& m, Axis eta, double tol);

/// Factorisation R = diameter * diag(lambda) * diameter^{eta H} of an
/// eta-Hermitian matrix, with diameter unitary and lambda the singular
/// values. diameter = U (D^eta)^{1/2} where D = V^{eta H} U and (U, V) come
/// from the quaternion SVD of R.
///
/// Inputs with (numerically) repeated singular values are refused with
/// degenerate_spectrum_error: D is then no longer reliably diagonal and a
/// silent wrong answer is worse than an error.
struct EtaFactorisation {
  Axis eta = Axis::i;
  QMatrix diameter;
  std::vector<double> lambda;
};

EtaFactorisation eta_takagi(const QMatrix& r, Axis eta);

QMatrix eta_reconstruct(const EtaFactorisation& f);

}  // namespace qsp
