#pragma once

#include "varregion/bounds.hpp"
#include "varregion/regions.hpp"

namespace varregion {

/// Functions f with Re f' > beta and f''(0) = 2(1-beta) lambda.
struct SubclassParamsR {
  double beta = 0.0;
  Cx lambda = 0.0;
  Cx z0 = 0.0;

  void validate() const;
  /// Same problem in the P_{0,beta} parameterization (P = f').
  ClassParams as_class_params() const;
};

/// Functions f with f' + alpha z f'' subordinate to (1+(1-2beta)z)/(1-z)
/// and f''(0) = 2(1-beta) lambda / (1+alpha).
struct SubclassParamsF {
  Cx alpha = 1.0;
  double beta = 0.0;
  Cx lambda = 0.0;
  Cx z0 = 0.0;

  /// Re(alpha) > 0, beta < 1, |lambda| <= 1, |z0| < 1.
  void validate() const;
  /// Additionally 0 <= beta < 1, as needed for the boundary curve.
  void validate_for_curve() const;
  ClassParams as_class_params() const;
};

/// theta -> z0 + 2(1-beta) * integral over [0, z0] of
///   (e^{i theta} s + lambda) s / (1 + conj(lambda) e^{i theta} s - (e^{i theta} s + lambda) s).
Cx vR_boundary_point(double theta, const SubclassParamsR& pr, const QuadratureConfig& cfg = {});

/// Requires |lambda| < 1, z0 != 0, n >= 16. Quadrature route.
BoundaryCurve vR_boundary(const SubclassParamsR& pr, int n, const QuadratureConfig& cfg = {},
                          unsigned threads = 1);

enum class SupCandidate {
  /// f' = H_{1,0} at gamma = 0: (1 + (1-2beta) z^2) / (1 - z^2).
  ExtremalKernel,
  /// f(z) = beta z + ((1-beta)/2) log((1+z)/(1-z)), i.e. f' = beta + (1-beta)/(1-z^2).
  LogCandidate,
};

struct SupBoundResult {
  double sup_value;
  double bound;
};

/// Grid supremum of (1-|z|^2)|f'(z)| over radii k/n * grid_radius and angles
/// 2 pi j/n, k, j = 0..n, compared with 2(1-beta).
SupBoundResult rbeta_sup_bound_check(double beta, double grid_radius, int n_grid,
                                     SupCandidate candidate = SupCandidate::ExtremalKernel);

/// The displayed logarithmic formula for the value (1-alpha) F(z0) + alpha z0 F'(z0)
/// at theta. Requires 0 <= beta < 1, |lambda| < 1.
Cx vG_boundary_point(double theta, const SubclassParamsF& pf);

BoundaryCurve vG_boundary_closed_form(const SubclassParamsF& pf, int n);

/// Extremal F_{a,0}: solves F' + alpha z F'' = (1 + (1-2beta) a z^2) / (1 - a z^2)
/// with F(0) = 0, F'(0) = 1, through a t-integral over [0, 1].
Cx F_a0(Cx z, Cx a, const SubclassParamsF& pf, const QuadratureConfig& cfg = {});

/// Membership disk for f' + alpha z f''.
GrowthBound vG_membership_bound(Cx z, const SubclassParamsF& pf);

/// (1 + (1-2beta) w) / (1 - w), w = delta(e^{i theta} z, lambda) z.
Cx vG_kernel(Cx z, double theta, const SubclassParamsF& pf);

}  // namespace varregion
