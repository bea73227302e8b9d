#pragma once

#include <cmath>
#include <complex>
#include <stdexcept>
#include <string>

namespace varregion {

using Cx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parameters outside the domain of the requested operation.
class InvalidParams : public Error {
 public:
  using Error::Error;
};

/// Adaptive quadrature ran out of subdivisions before meeting tolerance.
class NonConvergence : public Error {
 public:
  using Error::Error;
};

/// A rational map was evaluated at (or numerically at) its pole.
class PoleAtInput : public Error {
 public:
  using Error::Error;
};

/// The cube-root branch of G0 cannot be continued stably to this point.
class BranchAmbiguity : public Error {
 public:
  using Error::Error;
};

inline bool is_finite(Cx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

/// Throws InvalidParams when z carries NaN or Inf.
inline Cx require_finite(Cx z, const char* what) {
  if (!is_finite(z)) throw InvalidParams(std::string(what) + " must be finite");
  return z;
}

/// Maps an angle to (-pi, pi].
inline double normalize_angle(double theta) {
  double t = std::remainder(theta, 2.0 * kPi);
  if (t <= -kPi) t += 2.0 * kPi;
  return t;
}

inline Cx unit(double theta) { return std::polar(1.0, theta); }

}  // namespace varregion
