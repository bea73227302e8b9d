#include "varregion/subclasses.hpp"

#include "varregion/parallel.hpp"

namespace varregion {

namespace {

void require_disk_params(Cx lambda, Cx z0) {
  require_finite(lambda, "lambda");
  require_finite(z0, "z0");
  if (std::abs(lambda) > 1.0 + 1e-14) throw InvalidParams("lambda must satisfy |lambda| <= 1");
  if (!(std::abs(z0) < 1.0)) throw InvalidParams("z0 must satisfy |z0| < 1");
}

void require_curve_slice(Cx lambda, Cx z0) {
  if (!(std::abs(lambda) < 1.0)) throw InvalidParams("boundary curve requires |lambda| < 1");
  if (z0 == Cx{}) throw InvalidParams("boundary curve requires z0 != 0");
}

// (t^{1/2} - t^{1/(2 alpha)}) / (1 - alpha) with t = u^2, written so that it
// stays accurate as alpha -> 1.
Cx weight_difference(double u, Cx alpha) {
  const double log_u = std::log(u);
  const Cx x = log_u * (1.0 - alpha) / alpha;
  Cx phi;  // expm1(x) / x
  if (std::abs(x) < 1e-5) {
    phi = 1.0 + x / 2.0 + x * x / 6.0 + x * x * x / 24.0;
  } else {
    phi = (std::exp(x) - 1.0) / x;
  }
  return -u * (log_u / alpha) * phi;
}

}  // namespace

void SubclassParamsR::validate() const { as_class_params().validate(); }

ClassParams SubclassParamsR::as_class_params() const { return ClassParams{0.0, beta, lambda, z0}; }

void SubclassParamsF::validate() const {
  require_finite(alpha, "alpha");
  if (!(alpha.real() > 0.0)) throw InvalidParams("alpha must satisfy Re(alpha) > 0");
  if (!std::isfinite(beta) || !(beta < 1.0)) throw InvalidParams("beta must satisfy beta < 1");
  require_disk_params(lambda, z0);
}

void SubclassParamsF::validate_for_curve() const {
  validate();
  if (!(beta >= 0.0)) throw InvalidParams("boundary curve requires 0 <= beta < 1");
}

ClassParams SubclassParamsF::as_class_params() const { return ClassParams{0.0, beta, lambda, z0}; }

Cx vR_boundary_point(double theta, const SubclassParamsR& pr, const QuadratureConfig& cfg) {
  pr.validate();
  const Cx rot = unit(theta);
  const Cx lam = pr.lambda;
  auto f = [&](Cx s) {
    const Cx lead = (rot * s + lam) * s;
    return lead / (1.0 + std::conj(lam) * rot * s - lead);
  };
  return pr.z0 + 2.0 * (1.0 - pr.beta) * integrate_segment(f, 0.0, pr.z0, cfg);
}

BoundaryCurve vR_boundary(const SubclassParamsR& pr, int n, const QuadratureConfig& cfg,
                          unsigned threads) {
  pr.validate();
  require_curve_slice(pr.lambda, pr.z0);
  if (n < 16) throw InvalidParams("boundary curve needs at least 16 samples");
  BoundaryCurve curve{pr.as_class_params(), uniform_thetas(n), {}, CurveMethod::Quadrature};
  curve.points.resize(curve.thetas.size());
  parallel_for(curve.thetas.size(), threads,
               [&](std::size_t k) { curve.points[k] = vR_boundary_point(curve.thetas[k], pr, cfg); });
  return curve;
}

SupBoundResult rbeta_sup_bound_check(double beta, double grid_radius, int n_grid,
                                     SupCandidate candidate) {
  if (!(beta >= 0.0 && beta < 0.5)) throw InvalidParams("beta must satisfy 0 <= beta < 1/2");
  if (!(grid_radius > 0.0 && grid_radius < 1.0))
    throw InvalidParams("grid_radius must lie in (0, 1)");
  if (n_grid < 1) throw InvalidParams("n_grid must be positive");
  auto derivative = [&](Cx z) {
    const Cx z2 = z * z;
    if (candidate == SupCandidate::ExtremalKernel) return (1.0 + (1.0 - 2.0 * beta) * z2) / (1.0 - z2);
    return beta + (1.0 - beta) / (1.0 - z2);
  };
  double sup = 0.0;
  for (int k = 0; k <= n_grid; ++k) {
    const double r = grid_radius * k / n_grid;
    for (int j = 0; j <= n_grid; ++j) {
      const Cx z = std::polar(r, 2.0 * kPi * j / n_grid);
      sup = std::max(sup, (1.0 - r * r) * std::abs(derivative(z)));
    }
  }
  return {sup, 2.0 * (1.0 - beta)};
}

Cx vG_boundary_point(double theta, const SubclassParamsF& pf) {
  pf.validate_for_curve();
  if (!(std::abs(pf.lambda) < 1.0)) throw InvalidParams("boundary curve requires |lambda| < 1");
  const Cx half = unit(theta / 2.0);
  const Cx lh = std::conj(pf.lambda) * half;
  const double b = lh.imag();
  const double s = std::sqrt(1.0 - b * b);
  const Cx arg_plus = 1.0 + half * pf.z0 / Cx(s, -b);
  const Cx arg_minus = 1.0 - half * pf.z0 / Cx(s, b);
  if (!(arg_plus.real() > 0.0 && arg_minus.real() > 0.0))
    throw Error("log argument left the right half-plane");
  const Cx bracket = (1.0 + lh * Cx(-s, b)) * std::log(arg_plus) -
                     (1.0 + lh * Cx(s, b)) * std::log(arg_minus);
  return (2.0 * pf.beta - 1.0) * pf.z0 + (1.0 - pf.beta) * std::conj(half) / s * bracket;
}

BoundaryCurve vG_boundary_closed_form(const SubclassParamsF& pf, int n) {
  pf.validate_for_curve();
  require_curve_slice(pf.lambda, pf.z0);
  if (n < 16) throw InvalidParams("boundary curve needs at least 16 samples");
  BoundaryCurve curve{pf.as_class_params(), uniform_thetas(n), {}, CurveMethod::ClosedForm};
  curve.points.reserve(curve.thetas.size());
  for (double theta : curve.thetas) curve.points.push_back(vG_boundary_point(theta, pf));
  return curve;
}

Cx F_a0(Cx z, Cx a, const SubclassParamsF& pf, const QuadratureConfig& cfg) {
  pf.validate();
  require_finite(z, "z");
  require_finite(a, "a");
  if (!(std::abs(z) < 1.0)) throw InvalidParams("z must lie in the open unit disk");
  if (std::abs(a) > 1.0) throw InvalidParams("a must satisfy |a| <= 1");
  if (a == Cx{} || z == Cx{}) return z;
  const Cx az2 = a * z * z;
  const Cx scale = (1.0 - pf.beta) * a * z * z * z;
  // t = u^2, dt = 2u du.
  if (std::abs(pf.alpha - 1.0) < 1e-9) {
    const Cx integral = integrate_real(
        [&](double u) { return 2.0 * u * u * (-2.0 * std::log(u)) / (1.0 - u * u * az2); }, 0.0, 1.0,
        cfg);
    return z + scale / 2.0 * integral;
  }
  const Cx integral = integrate_real(
      [&](double u) { return 2.0 * u * weight_difference(u, pf.alpha) / (1.0 - u * u * az2); },
      0.0, 1.0, cfg);
  return z + scale * integral;
}

GrowthBound vG_membership_bound(Cx z, const SubclassParamsF& pf) {
  pf.validate();
  if (!(std::abs(z) < 1.0)) throw InvalidParams("z must lie in the open unit disk");
  const Cx lam = pf.lambda;
  const double z2 = std::norm(z);
  const double k = 1.0 - 2.0 * pf.beta;
  const double den = (1.0 - z2) * (1.0 + z2 - 2.0 * (lam * z).real());
  const Cx c = ((1.0 + k * lam * z) * (1.0 - std::conj(lam) * std::conj(z)) +
                z2 * (std::conj(z) - lam) * (std::conj(lam) + k * z)) /
               den;
  const double r = 2.0 * (1.0 - pf.beta) * (1.0 - std::norm(lam)) * z2 / den;
  return {c, std::max(r, 0.0)};
}

Cx vG_kernel(Cx z, double theta, const SubclassParamsF& pf) {
  const Cx w = mobius_delta(unit(theta) * z, pf.lambda) * z;
  return (1.0 + (1.0 - 2.0 * pf.beta) * w) / (1.0 - w);
}

}  // namespace varregion
