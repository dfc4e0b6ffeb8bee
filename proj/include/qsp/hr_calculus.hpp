#pragma once

#include <functional>
#include <string>

#include "qsp/qmatrix.hpp"

namespace qsp {

/// Evaluatable mapping H^m -> H. Evaluation must be deterministic and
/// reentrant; the engine holds no state between calls.
struct ScalarField {
  std::string name;
  std::function<Quaternion(const QVector&)> eval;

  Quaternion operator()(const QVector& q) const { return eval(q); }
};

/// Which side of the real partial derivatives the imaginary units multiply:
/// right-operator form u * df/dq_u (the default), left form df/dq_u * u.
/// Both agree on real-valued functions.
enum class GradientSide { right, left };

/// The four gradient blocks with respect to the conjugated augmented basis:
/// d_conj = df/dq*, and the involution-conjugate partials df/dq^{i*},
/// df/dq^{j*}, df/dq^{k*}.
struct HRGradient {
  QVector d_conj;
  QVector d_conj_i, d_conj_j, d_conj_k;
  GradientSide side = GradientSide::right;
};

/// Central finite differences on the four real components of every
/// coordinate, combined per
///   df/dq*     = (df/dq_r + i df/dq_i + j df/dq_j + k df/dq_k) / 4
/// and the sign patterns of the augmented basis rows for the other blocks.
HRGradient fd_gradient(const ScalarField& f, const QVector& q, double h,
                       GradientSide side = GradientSide::right);

/// Step size used by the rule engines when none is supplied.
inline double default_fd_step(double scale) { return 1e-6 * std::max(1.0, scale); }

/// Closed-form df/dq* entries:
///   norm_sq : q / 2            norm : q / (4 ||q||)
///   square  : -Re{q}           qrelu: (u(q_r) - u(q_i) - u(q_j) - u(q_k)) / 4
///   identity: -1/2             conj : q^-1 q_r  (derivative in the base
///                                     rotated by q^-1; the product-rule term)
enum class CatalogFn { norm_sq, norm, square, qrelu, identity, conj };

bool catalog_from_name(const std::string& name, CatalogFn& out);

Quaternion catalog_gradient(CatalogFn fn, const Quaternion& q);

/// The function each catalog entry differentiates, for oracle checks.
ScalarField catalog_field(CatalogFn fn);

/// Max relative error between the catalog entry and central finite
/// differences over `trials` random points sampled away from the entry's
/// singular set. The conj entry is checked through the product-rule assembly
/// of q q*.
double catalog_fd_max_error(CatalogFn fn, int trials, unsigned long long seed);

/// d(nu f)/dq* = nu * (gradient of f taken in the base rotated by nu^-1).
/// The caller supplies that rotated-base gradient; for real-valued f it is
/// the ordinary gradient, which makes nu * grad the testable special case.
HRGradient left_const_mul_rule(const Quaternion& nu, const HRGradient& grad);

/// d(f nu)/dq* = (df/dq*) nu.
HRGradient right_const_mul_rule(const HRGradient& grad, const Quaternion& nu);

/// d(f p)/dq* = f(q) * dp/d(q^{f(q)^-1})* + (df/dq*) p(q) for scalar fields.
/// When f(q) == 0 the rotated base is undefined and the value falls back to
/// plain finite differences of the pointwise product, with fd_fallback set.
struct ProductRuleResult {
  Quaternion d_conj;
  bool fd_fallback = false;
};

ProductRuleResult product_rule(const ScalarField& f, const ScalarField& p,
                               const Quaternion& q, double h = 0.0);

/// Chain rule for outer real -> real and inner H^m -> R:
/// df(p(q))/dq* = (dp*/dq*) f'(p(q)).
QVector chain_rule_real_inner(const std::function<double(double)>& outer,
                              const ScalarField& inner, const QVector& q,
                              double h = 0.0);

/// Norm of the analyticity defect df/dq_r + i df/dq_i + j df/dq_j + k df/dq_k
/// (side selects on which side the units multiply), finite-difference
/// estimated. Zero only for the narrow analytic class.
double crf_residual(const ScalarField& f, const Quaternion& q, double h,
                    GradientSide side = GradientSide::right);

/// Norm of df/dq_r + xi df/d||Im q|| with xi = Im q / ||Im q||; vanishes where
/// f behaves like a complex-analytic function in the plane of q.
double local_analyticity_residual(const ScalarField& f, const Quaternion& q,
                                  double h);

}  // namespace qsp
