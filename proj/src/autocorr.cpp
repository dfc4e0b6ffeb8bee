#include "qsp/autocorr.hpp"

#include <algorithm>
#include <cstdlib>

namespace qsp {

namespace {

Quaternion lag_factor(const Quaternion& x, CorrKind kind) {
  switch (kind) {
    case CorrKind::c: return conj(x);
    case CorrKind::i: return conj(involution(x, Axis::i));
    case CorrKind::j: return conj(involution(x, Axis::j));
    case CorrKind::k: return conj(involution(x, Axis::k));
    default: return x;
  }
}

QVector prepare(const QVector& signal, bool pure_mode, bool demean) {
  QVector q = signal;
  if (pure_mode)
    for (Quaternion& s : q) s.r = 0.0;
  if (demean) {
    Quaternion mean{};
    for (const Quaternion& s : q) mean += s;
    mean /= static_cast<double>(q.size());
    for (Quaternion& s : q) s -= mean;
  }
  return q;
}

}  // namespace

QVector autocorr(const QVector& signal, CorrKind kind, Estimator estimator,
                 bool pure_mode, bool demean) {
  if (signal.empty()) throw std::domain_error("autocorr: empty signal");
  const QVector q = prepare(signal, pure_mode, demean);
  const int n = static_cast<int>(q.size());
  QVector out(2 * n - 1);
  for (int lag = -(n - 1); lag <= n - 1; ++lag) {
    Quaternion acc{};
    const int lo = std::max(0, lag);
    const int hi = n + std::min(0, lag);  // exclusive
    for (int t = lo; t < hi; ++t) acc += q[t] * lag_factor(q[t - lag], kind);
    const double div = estimator == Estimator::biased
                           ? static_cast<double>(n)
                           : static_cast<double>(n - std::abs(lag));
    out[lag + n - 1] = acc / div;
  }
  return out;
}

const QVector& AutocorrSet::seq(CorrKind kind) const {
  switch (kind) {
    case CorrKind::c: return r_c;
    case CorrKind::i: return r_i;
    case CorrKind::j: return r_j;
    case CorrKind::k: return r_k;
    default: return r_p;
  }
}

const Quaternion& AutocorrSet::at(CorrKind kind, int lag) const {
  if (std::abs(lag) > max_lag) throw shape_error("AutocorrSet::at: lag out of range");
  return seq(kind)[lag + max_lag];
}

AutocorrSet AutocorrSet::estimate(const QVector& signal, Estimator estimator,
                                  bool pure_mode, bool demean) {
  AutocorrSet set;
  set.max_lag = static_cast<int>(signal.size()) - 1;
  set.estimator = estimator;
  set.pure_mode = pure_mode;
  set.r_c = autocorr(signal, CorrKind::c, estimator, pure_mode, demean);
  set.r_i = autocorr(signal, CorrKind::i, estimator, pure_mode, demean);
  set.r_j = autocorr(signal, CorrKind::j, estimator, pure_mode, demean);
  set.r_k = autocorr(signal, CorrKind::k, estimator, pure_mode, demean);
  set.r_p = autocorr(signal, CorrKind::p, estimator, pure_mode, demean);
  return set;
}

double check_dependency(const AutocorrSet& set) {
  const std::size_t len = set.r_c.size();
  if (set.r_i.size() != len || set.r_j.size() != len || set.r_k.size() != len ||
      set.r_p.size() != len)
    throw shape_error("check_dependency: lag ranges differ");
  double worst = 0.0;
  for (std::size_t t = 0; t < len; ++t) {
    const Quaternion rhs = (set.r_i[t] + set.r_j[t] + set.r_k[t] - set.r_c[t]) * 0.5;
    worst = std::max(worst, norm(set.r_p[t] - rhs));
  }
  return worst;
}

namespace {

QMatrix toeplitz_of(const QVector& seq, int max_lag, int L) {
  QMatrix m(L + 1, L + 1);
  for (int r = 0; r <= L; ++r)
    for (int c = 0; c <= L; ++c) m(r, c) = seq[(c - r) + max_lag];
  return m;
}

}  // namespace

CorrMatrices toeplitz(const AutocorrSet& set, int L) {
  if (L < 0 || L > set.max_lag) throw shape_error("toeplitz: L out of range");
  return {toeplitz_of(set.r_c, set.max_lag, L), toeplitz_of(set.r_i, set.max_lag, L),
          toeplitz_of(set.r_j, set.max_lag, L), toeplitz_of(set.r_k, set.max_lag, L),
          toeplitz_of(set.r_p, set.max_lag, L)};
}

Eigen::MatrixXd component_matrix(const QMatrix& m, Component c) {
  Eigen::MatrixXd out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t col = 0; col < m.cols(); ++col) {
      const Quaternion& q = m(r, col);
      switch (c) {
        case Component::r: out(r, col) = q.r; break;
        case Component::i: out(r, col) = q.i; break;
        case Component::j: out(r, col) = q.j; break;
        default: out(r, col) = q.k; break;
      }
    }
  return out;
}

RealCorrSet duality_extract(const CorrMatrices& mats) {
  const QMatrix sum_all = mats.c + mats.i + mats.j + mats.k;
  const QMatrix c_i = mats.c + mats.i - mats.j - mats.k;
  const QMatrix c_j = mats.c - mats.i + mats.j - mats.k;
  const QMatrix c_k = mats.c - mats.i - mats.j + mats.k;

  RealCorrSet out;
  out.rr = component_matrix(sum_all, Component::r) / 4.0;
  out.ii = component_matrix(c_i, Component::r) / 4.0;
  out.jj = component_matrix(c_j, Component::r) / 4.0;
  out.kk = component_matrix(c_k, Component::r) / 4.0;
  out.ir = component_matrix(sum_all, Component::i) / 4.0;
  out.jr = component_matrix(sum_all, Component::j) / 4.0;
  out.kr = component_matrix(sum_all, Component::k) / 4.0;
  out.ji = component_matrix(c_i, Component::k) / 4.0;
  out.ki = component_matrix(c_i, Component::j) / -4.0;
  out.kj = component_matrix(c_j, Component::i) / 4.0;
  return out;
}

namespace {

const std::vector<double>& pick(const Quadrivariate& qv, Component c) {
  switch (c) {
    case Component::r: return qv.r;
    case Component::i: return qv.i;
    case Component::j: return qv.j;
    default: return qv.k;
  }
}

}  // namespace

std::vector<double> real_crosscorr_seq(const Quadrivariate& qv, Component x,
                                       Component y, Estimator estimator) {
  const std::vector<double>& xs = pick(qv, x);
  const std::vector<double>& ys = pick(qv, y);
  if (xs.size() != ys.size())
    throw shape_error("real_crosscorr_seq: component lengths differ");
  if (xs.empty()) throw std::domain_error("real_crosscorr_seq: empty signal");
  const int n = static_cast<int>(xs.size());
  std::vector<double> out(2 * n - 1, 0.0);
  for (int lag = -(n - 1); lag <= n - 1; ++lag) {
    double acc = 0.0;
    const int lo = std::max(0, lag);
    const int hi = n + std::min(0, lag);
    for (int t = lo; t < hi; ++t) acc += xs[t] * ys[t - lag];
    const double div = estimator == Estimator::biased
                           ? static_cast<double>(n)
                           : static_cast<double>(n - std::abs(lag));
    out[lag + n - 1] = acc / div;
  }
  return out;
}

Eigen::MatrixXd real_crosscorr(const Quadrivariate& qv, Component x, Component y,
                               int L, Estimator estimator) {
  const std::vector<double> seq = real_crosscorr_seq(qv, x, y, estimator);
  const int max_lag = static_cast<int>(qv.size()) - 1;
  if (L < 0 || L > max_lag) throw shape_error("real_crosscorr: L out of range");
  Eigen::MatrixXd m(L + 1, L + 1);
  for (int r = 0; r <= L; ++r)
    for (int c = 0; c <= L; ++c) m(r, c) = seq[(c - r) + max_lag];
  return m;
}

PseudoParts pseudo_decompose(const RealCorrSet& rc) {
  PseudoParts out;
  out.re = rc.rr - rc.ii - rc.jj - rc.kk;
  out.im_i = rc.ir.transpose() + rc.ir + rc.kj.transpose() - rc.kj;
  out.im_j = rc.jr.transpose() + rc.jr - rc.ki.transpose() + rc.ki;
  out.im_k = rc.kr.transpose() + rc.kr - rc.ji + rc.ji.transpose();
  return out;
}

}  // namespace qsp
