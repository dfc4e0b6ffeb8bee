#pragma once

#include <stdexcept>
#include <string>

namespace qsp {

/// Mismatched vector/matrix dimensions.
class shape_error : public std::invalid_argument {
 public:
  explicit shape_error(const std::string& what) : std::invalid_argument(what) {}
};

/// Factorisation refused because the spectrum is (numerically) repeated and a
/// reliable unitary factor cannot be constructed.
class degenerate_spectrum_error : public std::runtime_error {
 public:
  explicit degenerate_spectrum_error(const std::string& what)
      : std::runtime_error(what) {}
};

/// Adaptive filter error grew beyond the divergence guard.
class divergence_error : public std::runtime_error {
 public:
  explicit divergence_error(const std::string& what) : std::runtime_error(what) {}
};

/// Non-finite values or a failed numerical backend.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qsp
