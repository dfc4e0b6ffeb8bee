#include "qsp/filters.hpp"

#include <complex>

#include "qsp/errors.hpp"

namespace qsp {

QVector WidelyLinearWeights::stacked() const {
  const std::size_t n = g.size();
  if (h.size() != n || u.size() != n || v.size() != n)
    throw shape_error("WidelyLinearWeights: block lengths differ");
  QVector w;
  w.reserve(4 * n);
  w.insert(w.end(), g.begin(), g.end());
  w.insert(w.end(), h.begin(), h.end());
  w.insert(w.end(), u.begin(), u.end());
  w.insert(w.end(), v.begin(), v.end());
  return w;
}

WidelyLinearWeights WidelyLinearWeights::from_stacked(const QVector& w) {
  if (w.size() % 4 != 0)
    throw shape_error("WidelyLinearWeights: stacked length must be a multiple of 4");
  const std::size_t n = w.size() / 4;
  WidelyLinearWeights out;
  out.g.assign(w.begin(), w.begin() + n);
  out.h.assign(w.begin() + n, w.begin() + 2 * n);
  out.u.assign(w.begin() + 2 * n, w.begin() + 3 * n);
  out.v.assign(w.begin() + 3 * n, w.end());
  return out;
}

Quaternion wl_predict(const WidelyLinearWeights& w, const QVector& z) {
  if (z.size() != w.taps()) throw shape_error("wl_predict: regressor length differs");
  const QVector za = augment(z).stack;
  const QVector ws = w.stacked();
  Quaternion yhat{};
  for (std::size_t t = 0; t < ws.size(); ++t) yhat += ws[t] * za[t];
  return yhat;
}

QMatrix augmented_weight_matrix(const WidelyLinearWeights& w) {
  const std::size_t n = w.taps();
  QMatrix m(4, 4 * n);
  const QVector* row1[4] = {&w.g, &w.h, &w.u, &w.v};
  const QVector* row2[4] = {&w.h, &w.g, &w.v, &w.u};
  const QVector* row3[4] = {&w.u, &w.v, &w.g, &w.h};
  const QVector* row4[4] = {&w.v, &w.u, &w.h, &w.g};
  for (std::size_t b = 0; b < 4; ++b)
    for (std::size_t t = 0; t < n; ++t) {
      m(0, b * n + t) = (*row1[b])[t];
      m(1, b * n + t) = involution((*row2[b])[t], Axis::i);
      m(2, b * n + t) = involution((*row3[b])[t], Axis::j);
      m(3, b * n + t) = involution((*row4[b])[t], Axis::k);
    }
  return m;
}

AugmentedVector augmented_predict(const WidelyLinearWeights& w, const QVector& z) {
  if (z.size() != w.taps())
    throw shape_error("augmented_predict: regressor length differs");
  const QVector stack = augmented_weight_matrix(w) * augment(z).stack;
  return {{stack[0]}, stack};
}

FilterState make_filter_state(std::size_t taps, double gain, Activation activation) {
  if (gain < 0.0) throw std::domain_error("make_filter_state: gain must be >= 0");
  FilterState st;
  st.weights = WidelyLinearWeights::zeros(taps);
  st.gain = gain;
  st.activation = activation;
  return st;
}

namespace {

constexpr double kDivergenceFactor = 1e6;

void guard(FilterState& st, const Quaternion& eps, const Quaternion& target) {
  if (!is_finite(eps)) throw divergence_error("filter: non-finite error");
  st.target_scale = std::max(st.target_scale, norm(target));
  if (norm(eps) > kDivergenceFactor * std::max(st.target_scale, 1e-9))
    throw divergence_error("filter: error grew beyond divergence guard");
}

void apply_update(FilterState& st, const QVector& za, const Quaternion& step_factor) {
  QVector w = st.weights.stacked();
  for (std::size_t t = 0; t < w.size(); ++t)
    w[t] += st.gain * (step_factor * conj(za[t]));
  st.weights = WidelyLinearWeights::from_stacked(w);
  if (st.strictly_linear) {
    const std::size_t n = st.weights.taps();
    st.weights.h.assign(n, Quaternion{});
    st.weights.u.assign(n, Quaternion{});
    st.weights.v.assign(n, Quaternion{});
  }
}

/// Evaluate a complex-plane function along the input's own imaginary axis.
template <typename Fn>
Quaternion lift_plane(const Quaternion& q, Fn fn) {
  const double im = imag_norm(q);
  const std::complex<double> w = fn(std::complex<double>(q.r, im));
  if (im == 0.0) return {w.real(), w.imag(), 0.0, 0.0};
  const double s = w.imag() / im;
  return {w.real(), s * q.i, s * q.j, s * q.k};
}

}  // namespace

Quaternion q_tanh(const Quaternion& q) {
  return lift_plane(q, [](std::complex<double> z) { return std::tanh(z); });
}

void qlms_step(FilterState& state, const QVector& regressor, const Quaternion& target) {
  const QVector za = augment(regressor).stack;
  const QVector w = state.weights.stacked();
  if (za.size() != w.size()) throw shape_error("qlms_step: regressor length differs");
  Quaternion yhat{};
  for (std::size_t t = 0; t < w.size(); ++t) yhat += w[t] * za[t];
  const Quaternion eps = target - yhat;
  guard(state, eps, target);
  apply_update(state, za, eps);
  state.error_trace.push_back(eps);
  ++state.step;
}

namespace {

/// Gradient factor of the tanh output stage. The activation derivative acts
/// differently on the two invariant subspaces of the pre-activation plane:
/// the error component in the plane of s picks up phi'(q^{aH} w*) = sech^2 of
/// the conjugated pre-activation, the component across it the real quotient
/// Im tanh(z) / Im(z). Both collapse to sech^2(s) for real s, and the
/// combined factor reproduces the finite-difference gradient of |eps|^2.
Quaternion tanh_stage_factor(FilterState& st, const Quaternion& pre,
                             const Quaternion& eps) {
  const double y = imag_norm(pre);
  const std::complex<double> z(pre.r, y);
  const std::complex<double> c = std::cosh(z);
  if (std::abs(c) < 1e-6) ++st.pole_warnings;
  const std::complex<double> phi_prime = 1.0 / (c * c);
  if (y < 1e-12) return eps * phi_prime.real();

  const Quaternion xi = imag(pre) / y;
  const double along = eps.i * xi.i + eps.j * xi.j + eps.k * xi.k;
  const Quaternion eps_plane = Quaternion{eps.r} + xi * along;
  const Quaternion eps_cross = eps - eps_plane;
  const Quaternion phi_at_conj = Quaternion{phi_prime.real()} - xi * phi_prime.imag();
  const double cross_gain = std::tanh(z).imag() / y;
  return eps_plane * phi_at_conj + eps_cross * cross_gain;
}

}  // namespace

void nlqlms_step(FilterState& state, const QVector& regressor,
                 const Quaternion& target) {
  const QVector za = augment(regressor).stack;
  const QVector w = state.weights.stacked();
  if (za.size() != w.size()) throw shape_error("nlqlms_step: regressor length differs");
  Quaternion pre{};
  for (std::size_t t = 0; t < w.size(); ++t) pre += w[t] * za[t];

  const Quaternion yhat = q_tanh(pre);
  const Quaternion eps = target - yhat;
  guard(state, eps, target);
  apply_update(state, za, tanh_stage_factor(state, pre, eps));
  state.error_trace.push_back(eps);
  ++state.step;
}

FilterState run_filter(FilterState state, const QVector& signal,
                       const QVector& targets, std::size_t taps) {
  if (signal.size() != targets.size())
    throw shape_error("run_filter: signal and target lengths differ");
  if (taps < 1) throw std::domain_error("run_filter: taps must be >= 1");
  if (state.weights.taps() != taps)
    throw shape_error("run_filter: state was built for a different tap count");
  QVector reg(taps);
  for (std::size_t n = 0; n < signal.size(); ++n) {
    for (std::size_t d = 0; d < taps; ++d)
      reg[d] = n >= d ? signal[n - d] : Quaternion{};
    if (state.activation == Activation::linear)
      qlms_step(state, reg, targets[n]);
    else
      nlqlms_step(state, reg, targets[n]);
  }
  return state;
}

std::vector<double> error_power(const FilterState& state) {
  std::vector<double> out;
  out.reserve(state.error_trace.size());
  for (const Quaternion& e : state.error_trace) out.push_back(norm_sq(e));
  return out;
}

double final_window_mse(const FilterState& state, double fraction) {
  const std::size_t n = state.error_trace.size();
  if (n == 0) return 0.0;
  const std::size_t window =
      std::max<std::size_t>(1, static_cast<std::size_t>(fraction * n));
  double acc = 0.0;
  for (std::size_t t = n - window; t < n; ++t) acc += norm_sq(state.error_trace[t]);
  return acc / window;
}

}  // namespace qsp
