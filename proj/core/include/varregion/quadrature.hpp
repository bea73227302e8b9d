#pragma once

#include <functional>

#include "varregion/types.hpp"

namespace varregion {

struct QuadratureConfig {
  double abs_tol = 1e-12;
  double rel_tol = 1e-12;
  int max_subdivisions = 1 << 16;

  /// Throws InvalidParams unless abs_tol >= 1e-15, rel_tol > 0 and
  /// max_subdivisions >= 8.
  void validate() const;
};

/// Default config with abs_tol replaced by $VARREGION_TOL when it is set to
/// a valid number.
QuadratureConfig config_from_env();

using ComplexFn = std::function<Cx(Cx)>;

/// Integral of f along the straight segment from a to b.
///
/// Adaptive 7/15-point Gauss-Kronrod on the parameter t in [0, 1] with
/// zeta = a + t(b - a). The interval with the largest error estimate is
/// bisected until the summed estimate is below
/// max(abs_tol, rel_tol * |result|). Deterministic for fixed inputs.
/// Throws NonConvergence when max_subdivisions is reached first.
Cx integrate_segment(const ComplexFn& f, Cx a, Cx b, const QuadratureConfig& cfg = {});

/// Integral over the real interval [lo, hi] of a complex-valued function.
Cx integrate_real(const std::function<Cx(double)>& f, double lo, double hi,
                  const QuadratureConfig& cfg = {});

}  // namespace varregion
