#pragma once

#include <cstddef>
#include <vector>

#include "qsp/augmented.hpp"
#include "qsp/qmatrix.hpp"

namespace qsp {

/// Widely linear coefficient set: yhat = g^T z + h^T z^i + u^T z^j + v^T z^k.
/// The stacked view [g; h; u; v] lines up with the augmented regressor
/// [z; z^i; z^j; z^k]; both views predict identically.
struct WidelyLinearWeights {
  QVector g, h, u, v;

  static WidelyLinearWeights zeros(std::size_t n) {
    return {QVector(n), QVector(n), QVector(n), QVector(n)};
  }

  std::size_t taps() const { return g.size(); }

  QVector stacked() const;
  static WidelyLinearWeights from_stacked(const QVector& w);
};

/// Plain-transpose contraction w^T z^a, weights on the left.
Quaternion wl_predict(const WidelyLinearWeights& w, const QVector& z);

/// The 4 x 4n block weight matrix whose rows produce [yhat; yhat^i; yhat^j;
/// yhat^k] from z^a:
///   [ g^T    h^T    u^T    v^T  ]
///   [ h^iT   g^iT   v^iT   u^iT ]
///   [ u^jT   v^jT   g^jT   h^jT ]
///   [ v^kT   u^kT   h^kT   g^kT ]
QMatrix augmented_weight_matrix(const WidelyLinearWeights& w);

/// Applies the block weight matrix to the augmented regressor. Rows 2..4 of
/// the result equal the i, j, k involutions of row 1.
AugmentedVector augmented_predict(const WidelyLinearWeights& w, const QVector& z);

enum class Activation { linear, tanh };

/// Adaptive filter state. Steps are strictly sequential; independent filters
/// may run concurrently.
struct FilterState {
  WidelyLinearWeights weights;
  double gain = 0.01;
  std::size_t step = 0;
  std::vector<Quaternion> error_trace;
  Activation activation = Activation::linear;
  /// Adapt only the strictly linear block g (h, u, v stay frozen at zero).
  bool strictly_linear = false;
  /// Divergence guard scale: the largest target magnitude seen so far.
  double target_scale = 0.0;
  /// Count of activation evaluations flagged near a pole.
  int pole_warnings = 0;
};

FilterState make_filter_state(std::size_t taps, double gain,
                              Activation activation = Activation::linear);

/// One stochastic gradient step: eps = y - w^T q^a computed before the
/// update, then w <- w + gain * eps * conj(q^a). The error sits left of the
/// conjugated regressor; the one-half of the squared-error gradient is
/// absorbed into the gain.
void qlms_step(FilterState& state, const QVector& regressor, const Quaternion& target);

/// Nonlinear variant with yhat = tanh(w^T q^a); the update multiplies, in
/// this order, eps * (tanh stage gradient factor) * conj(q^a). The factor is
/// phi'(q^{aH} w*) = sech^2 on the error component lying in the plane of the
/// pre-activation and the real quotient Im tanh / Im across it, which is the
/// exact gradient of |eps|^2 (both pieces equal sech^2 for real arguments).
void nlqlms_step(FilterState& state, const QVector& regressor,
                 const Quaternion& target);

/// Slides a length-`taps` regressor window [q(n), ..., q(n-taps+1)] (zero
/// padded at the start) over the signal and steps the filter on every sample.
FilterState run_filter(FilterState state, const QVector& signal,
                       const QVector& targets, std::size_t taps);

/// |eps|^2 per step.
std::vector<double> error_power(const FilterState& state);

/// Mean |eps|^2 over the trailing fraction of steps (default last 10%).
double final_window_mse(const FilterState& state, double fraction = 0.1);

/// tanh of a quaternion, taken in the plane spanned by the real axis and the
/// input's imaginary direction.
Quaternion q_tanh(const Quaternion& q);

}  // namespace qsp
