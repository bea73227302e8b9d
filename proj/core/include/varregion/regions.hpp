#pragma once

#include <vector>

#include "varregion/geometry.hpp"
#include "varregion/kernels.hpp"
#include "varregion/quadrature.hpp"

namespace varregion {

enum class CurveMethod { Quadrature, ClosedForm };

const char* to_string(CurveMethod m);

/// Samples theta -> integral of H_{e^{i theta},lambda} over [0, z0].
///
/// When the region collapses to a point (z0 = 0 or |lambda| = 1) the curve
/// holds exactly one point and no thetas.
struct BoundaryCurve {
  ClassParams params;
  std::vector<double> thetas;
  std::vector<Cx> points;
  CurveMethod method = CurveMethod::ClosedForm;

  bool is_point() const { return points.size() == 1 && thetas.empty(); }
  /// Throws InvalidParams for a point region.
  Polygon polygon() const;
  /// Largest gap between consecutive samples, closing gap included.
  double max_gap() const;
};

/// Intermediate quantities of the logarithmic closed form at one theta.
struct ClosedFormTerms {
  double b;          // Im(conj(lambda) e^{i theta/2})
  double sqrt_term;  // sqrt(1 - b^2)
  Cx z1;
  Cx z2;
  Cx K;
};

ClosedFormTerms closed_form_terms(double theta, const ClassParams& p);

Cx boundary_point_quadrature(double theta, const ClassParams& p, const QuadratureConfig& cfg = {});

/// Requires |lambda| < 1. Uses principal logarithms; throws Error if a log
/// argument leaves the right half-plane.
Cx boundary_point_closed_form(double theta, const ClassParams& p);

/// Uniform thetas -pi + 2 pi (k+1)/n, k = 0..n-1, covering (-pi, pi].
std::vector<double> uniform_thetas(int n);

/// Requires n_samples >= 16. Samples are evaluated on up to `threads`
/// workers (0 means hardware concurrency); the result does not depend on it.
BoundaryCurve boundary_curve(const ClassParams& p, int n_samples, CurveMethod method,
                             const QuadratureConfig& cfg = {}, unsigned threads = 1);

/// The single value of the region when |lambda| = 1 or z0 = 0.
Cx degenerate_point(const ClassParams& p);

/// Integral of H_{0,lambda} over [0, z0]; an interior point of the region.
Cx interior_center(const ClassParams& p);

/// Integral of H_{0,lambda} by quadrature; the cross-check route for
/// interior_center.
Cx interior_center_quadrature(const ClassParams& p, const QuadratureConfig& cfg = {});

/// Integral of a sampled member over [0, z0].
Cx member_value(const SampledMember& member, const QuadratureConfig& cfg = {});

}  // namespace varregion
