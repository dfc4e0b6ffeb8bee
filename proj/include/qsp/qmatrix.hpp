#pragma once

#include <cstddef>
#include <vector>

#include "qsp/errors.hpp"
#include "qsp/involution.hpp"
#include "qsp/quaternion.hpp"

namespace qsp {

using QVector = std::vector<Quaternion>;

inline QVector conj(const QVector& v) {
  QVector out(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) out[t] = conj(v[t]);
  return out;
}

inline QVector involution(const QVector& v, Axis a) {
  QVector out(v.size());
  for (std::size_t t = 0; t < v.size(); ++t) out[t] = involution(v[t], a);
  return out;
}

/// Dense quaternion matrix, row-major.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  static QMatrix identity(std::size_t n) {
    QMatrix m(n, n);
    for (std::size_t t = 0; t < n; ++t) m(t, t) = q_one;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Quaternion& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Quaternion& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  QMatrix transpose() const {
    QMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  QMatrix conjugate() const {
    QMatrix out(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t) out.data_[t] = qsp::conj(data_[t]);
    return out;
  }

  QMatrix hermitian() const { return conjugate().transpose(); }

  QMatrix involute(Axis a) const {
    QMatrix out(rows_, cols_);
    for (std::size_t t = 0; t < data_.size(); ++t)
      out.data_[t] = qsp::involution(data_[t], a);
    return out;
  }

  /// (M^eta)^H — involute every entry, then conjugate-transpose.
  QMatrix eta_hermitian(Axis a) const { return involute(a).hermitian(); }

  double frobenius_norm() const {
    double acc = 0.0;
    for (const Quaternion& q : data_) acc += norm_sq(q);
    return std::sqrt(acc);
  }

  friend QMatrix operator+(const QMatrix& a, const QMatrix& b) {
    require_same_shape(a, b, "QMatrix+");
    QMatrix out(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.data_.size(); ++t)
      out.data_[t] = a.data_[t] + b.data_[t];
    return out;
  }

  friend QMatrix operator-(const QMatrix& a, const QMatrix& b) {
    require_same_shape(a, b, "QMatrix-");
    QMatrix out(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.data_.size(); ++t)
      out.data_[t] = a.data_[t] - b.data_[t];
    return out;
  }

  friend QMatrix operator*(const QMatrix& a, double s) {
    QMatrix out(a.rows_, a.cols_);
    for (std::size_t t = 0; t < a.data_.size(); ++t) out.data_[t] = a.data_[t] * s;
    return out;
  }

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b) {
    if (a.cols_ != b.rows_) throw shape_error("QMatrix*: inner dimensions differ");
    QMatrix out(a.rows_, b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t t = 0; t < a.cols_; ++t) {
        const Quaternion& art = a(r, t);
        for (std::size_t c = 0; c < b.cols_; ++c) out(r, c) += art * b(t, c);
      }
    return out;
  }

  friend QVector operator*(const QMatrix& a, const QVector& x) {
    if (a.cols_ != x.size()) throw shape_error("QMatrix*vec: dimensions differ");
    QVector out(a.rows_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t c = 0; c < a.cols_; ++c) out[r] += a(r, c) * x[c];
    return out;
  }

 private:
  static void require_same_shape(const QMatrix& a, const QMatrix& b, const char* who) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
      throw shape_error(std::string(who) + ": shapes differ");
  }

  std::size_t rows_ = 0, cols_ = 0;
  QVector data_;
};

}  // namespace qsp
