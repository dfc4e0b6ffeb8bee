#pragma once

#include <Eigen/Dense>

#include "qsp/augmented.hpp"
#include "qsp/qmatrix.hpp"

namespace qsp {

enum class CorrKind { c, i, j, k, p };
enum class Estimator { biased, unbiased };
enum class Component { r, i, j, k };

/// Sample autocorrelation of one kind over lags -(N-1) .. N-1.
///
/// r_c(l) = E{ q(n) q*(n-l) }          (standard, conjugate on the right)
/// r_eta(l) = E{ q(n) q^{eta*}(n-l) }  (eta in {i, j, k})
/// r_p(l) = E{ q(n) q(n-l) }           (pseudo, no conjugate)
///
/// The expectation is realised as the time-average over one record. The
/// biased estimator divides every lag sum by N; the unbiased one by N - |l|.
/// Factor order is q(n) on the left — products do not commute.
/// pure_mode drops the real part of every sample before estimation.
QVector autocorr(const QVector& signal, CorrKind kind,
                 Estimator estimator = Estimator::biased, bool pure_mode = false,
                 bool demean = false);

/// All five sequences of one signal over lags -L .. L with L = N - 1.
struct AutocorrSet {
  int max_lag = 0;
  QVector r_c, r_i, r_j, r_k, r_p;
  Estimator estimator = Estimator::biased;
  bool pure_mode = false;

  const QVector& seq(CorrKind kind) const;
  const Quaternion& at(CorrKind kind, int lag) const;

  static AutocorrSet estimate(const QVector& signal,
                              Estimator estimator = Estimator::biased,
                              bool pure_mode = false, bool demean = false);
};

/// Max over lags of |r_p(l) - (r_i(l) + r_j(l) + r_k(l) - r_c(l)) / 2|.
double check_dependency(const AutocorrSet& set);

/// (L+1) x (L+1) Toeplitz autocorrelation matrices; entry (m, n) = r(n - m).
struct CorrMatrices {
  QMatrix c, i, j, k, p;
};

CorrMatrices toeplitz(const AutocorrSet& set, int L);

/// Real matrix of one component of a quaternion matrix.
Eigen::MatrixXd component_matrix(const QMatrix& m, Component c);

/// The ten real auto-/cross-correlation matrices extracted from the four
/// quaternion autocorrelation matrices:
///   R_rr = Re{R_c + R_i + R_j + R_k} / 4,   R_ii = Re{R_c + R_i - R_j - R_k} / 4,
///   R_jj = Re{R_c - R_i + R_j - R_k} / 4,   R_kk = Re{R_c - R_i - R_j + R_k} / 4,
///   R_ir = Im_i{R_c + R_i + R_j + R_k} / 4, R_jr = Im_j{same} / 4,
///   R_kr = Im_k{same} / 4,                  R_ji = Im_k{R_c + R_i - R_j - R_k} / 4,
///   R_ki = -Im_j{R_c + R_i - R_j - R_k} / 4, R_kj = Im_i{R_c - R_i + R_j - R_k} / 4.
struct RealCorrSet {
  Eigen::MatrixXd rr, ii, jj, kk, ir, jr, kr, ji, ki, kj;
};

RealCorrSet duality_extract(const CorrMatrices& mats);

/// Direct real-domain estimate r_xy(l) = E{ x(n) y(n-l) } over lags
/// -(N-1) .. N-1; the independent oracle for duality_extract.
std::vector<double> real_crosscorr_seq(const Quadrivariate& qv, Component x,
                                       Component y,
                                       Estimator estimator = Estimator::biased);

/// Toeplitz matrix of the direct real-domain estimate; entry (m, n) = r_xy(n - m).
Eigen::MatrixXd real_crosscorr(const Quadrivariate& qv, Component x, Component y,
                               int L, Estimator estimator = Estimator::biased);

/// The four real components of R_p recombined from real correlation matrices:
///   Re{R_p} = R_rr - R_ii - R_jj - R_kk,
///   Im_i{R_p} = R_ri + R_ir + R_jk - R_kj,
///   Im_j{R_p} = R_rj + R_jr - R_ik + R_ki,
///   Im_k{R_p} = R_rk + R_kr - R_ji + R_ij,
/// where R_yx = R_xy^T supplies the flipped-subscript matrices.
struct PseudoParts {
  Eigen::MatrixXd re, im_i, im_j, im_k;
};

PseudoParts pseudo_decompose(const RealCorrSet& rc);

}  // namespace qsp
