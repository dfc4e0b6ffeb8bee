#include "qsp/qlinalg.hpp"

#include <complex>

#include "qsp/errors.hpp"

namespace qsp {

namespace {

using Cx = std::complex<double>;

/// Antilinear structure map of the adjoint embedding: on entry pairs
/// (a, b) -> (-conj(b), conj(a)). Columns of an embedded quaternion matrix
/// come in (u, J u) pairs.
Eigen::VectorXcd structure_map(const Eigen::VectorXcd& x) {
  Eigen::VectorXcd out(x.size());
  for (Eigen::Index s = 0; s + 1 < x.size(); s += 2) {
    out[s] = -std::conj(x[s + 1]);
    out[s + 1] = std::conj(x[s]);
  }
  return out;
}

/// Quaternion column encoded by the first column of its 2x2-block embedding.
QVector column_from_complex(const Eigen::VectorXcd& u) {
  const std::size_t m = static_cast<std::size_t>(u.size()) / 2;
  QVector w(m);
  for (std::size_t s = 0; s < m; ++s) {
    const Cx a = u[2 * s];
    const Cx b = u[2 * s + 1];
    w[s] = {a.real(), a.imag(), -b.real(), b.imag()};
  }
  return w;
}

QMatrix from_columns(const std::vector<QVector>& cols, std::size_t rows) {
  QMatrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c)
    for (std::size_t r = 0; r < rows; ++r) m(r, c) = cols[c][r];
  return m;
}

/// Remove the {u_s, J u_s} components of earlier picks in the same singular
/// group, then normalise. Keeps the extracted quaternion columns orthonormal
/// even when singular values repeat.
void quaternionic_orthonormalise(Eigen::VectorXcd& u,
                                 const std::vector<Eigen::VectorXcd>& group) {
  for (int pass = 0; pass < 2; ++pass) {
    for (const Eigen::VectorXcd& g : group) {
      u -= g * g.dot(u);
      const Eigen::VectorXcd jg = structure_map(g);
      u -= jg * jg.dot(u);
    }
  }
  const double n = u.norm();
  if (n < 1e-8) throw numeric_error("qsvd: singular subspace collapsed");
  u /= n;
}

}  // namespace

Eigen::MatrixXcd complex_adjoint(const QMatrix& m) {
  Eigen::MatrixXcd out(2 * m.rows(), 2 * m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Quaternion& q = m(r, c);
      const Cx z1(q.r, q.i);
      const Cx z2(q.j, q.k);
      out(2 * r, 2 * c) = z1;
      out(2 * r, 2 * c + 1) = z2;
      out(2 * r + 1, 2 * c) = -std::conj(z2);
      out(2 * r + 1, 2 * c + 1) = std::conj(z1);
    }
  return out;
}

Qsvd qsvd(const QMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  const std::size_t p = std::min(rows, cols);
  const Eigen::MatrixXcd x = complex_adjoint(m);
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(x, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (svd.info() != Eigen::Success) throw numeric_error("qsvd: backend SVD failed");
  const Eigen::VectorXd s = svd.singularValues();
  const double smax = s.size() > 0 ? s[0] : 0.0;
  const double group_tol = 1e-8 * std::max(smax, 1e-300);
  const double rank_tol = 1e-12 * std::max(smax, 1e-300);

  Qsvd out;
  out.sigma.resize(p);
  std::vector<QVector> ucols(p), vcols(p);
  std::vector<Eigen::VectorXcd> ugroup, vgroup;
  double group_sigma = -1.0;

  for (std::size_t t = 0; t < p; ++t) {
    const double sig = 0.5 * (s[2 * t] + s[2 * t + 1]);
    out.sigma[t] = sig;
    if (group_sigma < 0.0 || group_sigma - sig > group_tol) {
      ugroup.clear();
      vgroup.clear();
      group_sigma = sig;
    }
    Eigen::VectorXcd u = svd.matrixU().col(2 * t);
    quaternionic_orthonormalise(u, ugroup);
    ugroup.push_back(u);
    Eigen::VectorXcd v;
    if (sig > rank_tol) {
      v = x.adjoint() * u / sig;
    } else {
      v = svd.matrixV().col(2 * t);
      quaternionic_orthonormalise(v, vgroup);
    }
    vgroup.push_back(v);
    ucols[t] = column_from_complex(u);
    vcols[t] = column_from_complex(v);
  }

  out.u = from_columns(ucols, rows);
  out.v = from_columns(vcols, cols);
  return out;
}

QMatrix qsvd_reconstruct(const Qsvd& f) {
  QMatrix scaled = f.u;
  for (std::size_t c = 0; c < scaled.cols(); ++c)
    for (std::size_t r = 0; r < scaled.rows(); ++r) scaled(r, c) *= f.sigma[c];
  return scaled * f.v.hermitian();
}

bool is_eta_hermitian(const QMatrix& m, Axis eta, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.eta_hermitian(eta)).frobenius_norm() <= tol * m.frobenius_norm();
}

namespace {

/// Square root of a unit-modulus diagonal entry e = d^eta such that the
/// factor s satisfies s (s^eta)* = e. For eta-Hermitian input the eta
/// component of e vanishes, so the root must be taken with its axis in the
/// plane orthogonal to eta; any residual eta component beyond tolerance
/// signals a degenerate spectrum.
Quaternion eta_plane_sqrt(Quaternion e, Axis eta) {
  const double mag = norm(e);
  if (mag < 1e-12) throw degenerate_spectrum_error("eta_takagi: zero phase entry");
  e /= mag;
  if (std::abs(component(e, eta)) > 1e-6)
    throw degenerate_spectrum_error(
        "eta_takagi: phase entry has a component along eta (repeated spectrum)");
  switch (eta) {
    case Axis::i: e.i = 0.0; break;
    case Axis::j: e.j = 0.0; break;
    case Axis::k: e.k = 0.0; break;
  }
  const double im = imag_norm(e);
  Quaternion axis;
  if (im < 1e-12) {
    if (e.r >= 0.0) return q_one;
    axis = eta == Axis::i ? q_j : q_i;
  } else {
    axis = imag(e) / im;
  }
  const double angle = std::atan2(im, e.r);
  return from_polar(1.0, axis, 0.5 * angle);
}

}  // namespace

EtaFactorisation eta_takagi(const QMatrix& r, Axis eta) {
  if (r.rows() != r.cols()) throw shape_error("eta_takagi: matrix must be square");
  if (!is_eta_hermitian(r, eta, 1e-8))
    throw std::invalid_argument("eta_takagi: input is not eta-Hermitian");

  const Qsvd svd = qsvd(r);
  const std::size_t n = r.rows();
  const QMatrix d = svd.v.eta_hermitian(eta) * svd.u;

  double off = 0.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (a != b) off += norm_sq(d(a, b));
  if (std::sqrt(off) > 1e-6 * d.frobenius_norm())
    throw degenerate_spectrum_error(
        "eta_takagi: phase matrix is not diagonal (repeated spectrum)");

  EtaFactorisation out;
  out.eta = eta;
  out.lambda = svd.sigma;
  out.diameter = svd.u;
  for (std::size_t c = 0; c < n; ++c) {
    const Quaternion s = eta_plane_sqrt(involution(d(c, c), eta), eta);
    for (std::size_t row = 0; row < n; ++row)
      out.diameter(row, c) = out.diameter(row, c) * s;
  }

  const double scale = r.frobenius_norm();
  if ((eta_reconstruct(out) - r).frobenius_norm() > 1e-8 * std::max(scale, 1e-300))
    throw degenerate_spectrum_error(
        "eta_takagi: reconstruction check failed (repeated spectrum)");
  return out;
}

QMatrix eta_reconstruct(const EtaFactorisation& f) {
  QMatrix scaled = f.diameter;
  for (std::size_t c = 0; c < scaled.cols(); ++c)
    for (std::size_t r = 0; r < scaled.rows(); ++r) scaled(r, c) *= f.lambda[c];
  return scaled * f.diameter.eta_hermitian(f.eta);
}

}  // namespace qsp
