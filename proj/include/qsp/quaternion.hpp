#pragma once

#include <cmath>
#include <ostream>
#include <stdexcept>

namespace qsp {

/// Four-component hypercomplex value q = r + i*qi + j*qj + k*qk with
/// Hamilton's product rules i*j = k, j*k = i, k*i = j, i*i = j*j = k*k = -1.
/// Components are stored (and serialised everywhere) in (r, i, j, k) order.
struct Quaternion {
  double r = 0.0;
  double i = 0.0;
  double j = 0.0;
  double k = 0.0;

  constexpr Quaternion() = default;
  constexpr Quaternion(double r_, double i_, double j_, double k_)
      : r(r_), i(i_), j(j_), k(k_) {}
  explicit constexpr Quaternion(double real) : r(real) {}

  constexpr Quaternion& operator+=(const Quaternion& o) {
    r += o.r;
    i += o.i;
    j += o.j;
    k += o.k;
    return *this;
  }
  constexpr Quaternion& operator-=(const Quaternion& o) {
    r -= o.r;
    i -= o.i;
    j -= o.j;
    k -= o.k;
    return *this;
  }
  constexpr Quaternion& operator*=(double s) {
    r *= s;
    i *= s;
    j *= s;
    k *= s;
    return *this;
  }
  constexpr Quaternion& operator/=(double s) {
    r /= s;
    i /= s;
    j /= s;
    k /= s;
    return *this;
  }

  constexpr Quaternion operator-() const { return {-r, -i, -j, -k}; }

  friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
    return a.r == b.r && a.i == b.i && a.j == b.j && a.k == b.k;
  }
};

inline constexpr Quaternion q_one{1.0, 0.0, 0.0, 0.0};
inline constexpr Quaternion q_i{0.0, 1.0, 0.0, 0.0};
inline constexpr Quaternion q_j{0.0, 0.0, 1.0, 0.0};
inline constexpr Quaternion q_k{0.0, 0.0, 0.0, 1.0};

constexpr Quaternion operator+(Quaternion a, const Quaternion& b) { return a += b; }
constexpr Quaternion operator-(Quaternion a, const Quaternion& b) { return a -= b; }
constexpr Quaternion operator*(Quaternion a, double s) { return a *= s; }
constexpr Quaternion operator*(double s, Quaternion a) { return a *= s; }
constexpr Quaternion operator/(Quaternion a, double s) { return a /= s; }

/// Hamilton product. Non-commutative: mul(a, b) != mul(b, a) in general.
constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {a.r * b.r - a.i * b.i - a.j * b.j - a.k * b.k,
          a.r * b.i + a.i * b.r + a.j * b.k - a.k * b.j,
          a.r * b.j - a.i * b.k + a.j * b.r + a.k * b.i,
          a.r * b.k + a.i * b.j - a.j * b.i + a.k * b.r};
}

constexpr Quaternion mul(const Quaternion& a, const Quaternion& b) { return a * b; }

constexpr Quaternion conj(const Quaternion& q) { return {q.r, -q.i, -q.j, -q.k}; }

constexpr double norm_sq(const Quaternion& q) {
  return q.r * q.r + q.i * q.i + q.j * q.j + q.k * q.k;
}

inline double norm(const Quaternion& q) { return std::sqrt(norm_sq(q)); }

constexpr Quaternion imag(const Quaternion& q) { return {0.0, q.i, q.j, q.k}; }

inline double imag_norm(const Quaternion& q) {
  return std::sqrt(q.i * q.i + q.j * q.j + q.k * q.k);
}

inline bool is_finite(const Quaternion& q) {
  return std::isfinite(q.r) && std::isfinite(q.i) && std::isfinite(q.j) &&
         std::isfinite(q.k);
}

inline Quaternion inverse(const Quaternion& q) {
  const double n2 = norm_sq(q);
  if (n2 == 0.0) throw std::domain_error("inverse: zero quaternion");
  return conj(q) / n2;
}

inline std::ostream& operator<<(std::ostream& os, const Quaternion& q) {
  return os << '(' << q.r << ", " << q.i << ", " << q.j << ", " << q.k << ')';
}

/// Polar decomposition q = magnitude * (cos(angle) + axis * sin(angle)).
/// The axis is a unit pure quaternion and angle lies in [0, pi]. When the
/// imaginary part is negligible the axis is undefined; it defaults to i and
/// the angle is 0 (r >= 0) or pi (r < 0) so that round trips stay exact.
struct PolarForm {
  double magnitude = 0.0;
  Quaternion axis = q_i;
  double angle = 0.0;
};

inline constexpr double kDegenerateAxisTol = 1e-12;

inline PolarForm to_polar(const Quaternion& q) {
  const double mag = norm(q);
  if (mag == 0.0) return {0.0, q_i, 0.0};
  const double im = imag_norm(q);
  if (im < kDegenerateAxisTol * mag) {
    return {mag, q_i, q.r >= 0.0 ? 0.0 : M_PI};
  }
  return {mag, imag(q) / im, std::atan2(im, q.r)};
}

inline Quaternion from_polar(const PolarForm& p) {
  return p.magnitude * (Quaternion{std::cos(p.angle)} + p.axis * std::sin(p.angle));
}

inline Quaternion from_polar(double magnitude, const Quaternion& axis, double angle) {
  return from_polar(PolarForm{magnitude, axis, angle});
}

/// exp(q) = exp(r) * (cos|Im q| + (Im q / |Im q|) sin|Im q|).
inline Quaternion q_exp(const Quaternion& q) {
  const double er = std::exp(q.r);
  const double im = imag_norm(q);
  if (im == 0.0) return Quaternion{er};
  const double s = er * std::sin(im) / im;
  return {er * std::cos(im), s * q.i, s * q.j, s * q.k};
}

namespace detail {
inline void require_square_to_minus_one(const Quaternion& xi, const char* who) {
  const Quaternion sq = xi * xi;
  if (norm(sq + q_one) > 1e-9)
    throw std::domain_error(std::string(who) + ": axis must satisfy xi^2 == -1");
}
}  // namespace detail

/// sin/cos taken in the plane spanned by the real axis and a unit pure
/// quaternion xi. The value is real; the exponential identities
/// sin(t) = (2 xi)^-1 (e^{xi t} - e^{-xi t}) and
/// cos(t) = (e^{xi t} + e^{-xi t}) / 2 hold for any valid xi.
inline Quaternion q_sin(double theta, const Quaternion& xi) {
  detail::require_square_to_minus_one(xi, "q_sin");
  return Quaternion{std::sin(theta)};
}

inline Quaternion q_cos(double theta, const Quaternion& xi) {
  detail::require_square_to_minus_one(xi, "q_cos");
  return Quaternion{std::cos(theta)};
}

/// Unit quaternion e^{axis * angle / 2} encoding a right-hand rotation of the
/// imaginary subspace by `angle` about `axis`. Rotors compose by
/// multiplication: (a * b) applies b first, then a.
struct Rotor {
  Quaternion half_angle_exp = q_one;

  static Rotor from_axis_angle(const Quaternion& axis, double angle) {
    if (std::abs(axis.r) > 1e-9 || std::abs(imag_norm(axis) - 1.0) > 1e-9)
      throw std::domain_error("Rotor: axis must be a unit pure quaternion");
    return {from_polar(1.0, axis, 0.5 * angle)};
  }

  Quaternion apply(const Quaternion& v) const {
    return half_angle_exp * v * inverse(half_angle_exp);
  }

  friend Rotor operator*(const Rotor& a, const Rotor& b) {
    return {a.half_angle_exp * b.half_angle_exp};
  }
};

/// Conjugation rotation of a pure quaternion: mu * v * mu^-1.
inline Quaternion rotate(const Quaternion& v, const Quaternion& axis, double angle) {
  if (std::abs(v.r) > 1e-12 * norm(v))
    throw std::domain_error("rotate: input must be a pure quaternion");
  return Rotor::from_axis_angle(axis, angle).apply(v);
}

}  // namespace qsp
