#include "varregion/regions.hpp"

#include "varregion/parallel.hpp"

namespace varregion {

namespace {

void require_open_slice(const ClassParams& p, const char* op) {
  p.validate();
  if (!(std::abs(p.lambda) < 1.0) || p.unimodular_lambda())
    throw InvalidParams(std::string(op) + " requires |lambda| < 1");
}

Cx principal_log(Cx arg) {
  // Every log argument here is 1 + u with |u| <= |z0| < 1.
  if (!(arg.real() > 0.0)) throw Error("log argument left the right half-plane");
  return std::log(arg);
}

// log(1 + u) without forming 1 + u.
Cx principal_log1p(Cx u) {
  if (!(1.0 + u.real() > 0.0)) throw Error("log argument left the right half-plane");
  return {0.5 * std::log1p(2.0 * u.real() + std::norm(u)), std::atan2(u.imag(), 1.0 + u.real())};
}

// (1/lambda) log(1 - lambda z0), continuous at lambda = 0.
Cx scaled_log(Cx lambda, Cx z0) {
  if (std::abs(lambda) < 1e-6) {
    const Cx u = lambda * z0;
    return -z0 * (1.0 + u / 2.0 + u * u / 3.0 + u * u * u / 4.0);
  }
  return principal_log1p(-lambda * z0) / lambda;
}

Cx center_expression(const ClassParams& p) {
  return p.z0 - p.tilt() * (p.z0 + scaled_log(p.lambda, p.z0));
}

}  // namespace

const char* to_string(CurveMethod m) {
  return m == CurveMethod::Quadrature ? "quadrature" : "closed";
}

Polygon BoundaryCurve::polygon() const {
  if (is_point()) throw InvalidParams("point region has no boundary polygon");
  return Polygon(points);
}

double BoundaryCurve::max_gap() const {
  double gap = 0.0;
  for (std::size_t i = 0; i < points.size(); ++i)
    gap = std::max(gap, std::abs(points[(i + 1) % points.size()] - points[i]));
  return gap;
}

ClosedFormTerms closed_form_terms(double theta, const ClassParams& p) {
  const Cx half = unit(theta / 2.0);
  const double b = (std::conj(p.lambda) * half).imag();
  const double s = std::sqrt(1.0 - b * b);
  const Cx conj_half = std::conj(half);
  const Cx K = (1.0 - p.beta) * std::cos(p.gamma) * unit(-p.gamma) * conj_half / s;
  return {b, s, conj_half * Cx(s, b), conj_half * Cx(-s, b), K};
}

Cx boundary_point_quadrature(double theta, const ClassParams& p, const QuadratureConfig& cfg) {
  p.validate();
  const ExtremalIndex idx = ExtremalIndex::from_theta(theta);
  return integrate_segment([&](Cx z) { return extremal_H(z, idx, p); }, 0.0, p.z0, cfg);
}

Cx boundary_point_closed_form(double theta, const ClassParams& p) {
  require_open_slice(p, "boundary_point_closed_form");
  const ClosedFormTerms t = closed_form_terms(theta, p);
  const Cx half = unit(theta / 2.0);
  const Cx lh = std::conj(p.lambda) * half;
  const Cx plus = (1.0 + lh * Cx(-t.sqrt_term, t.b)) *
                  principal_log(1.0 + half * p.z0 / Cx(t.sqrt_term, -t.b));
  const Cx minus = (1.0 + lh * Cx(t.sqrt_term, t.b)) *
                   principal_log(1.0 - half * p.z0 / Cx(t.sqrt_term, t.b));
  return (1.0 - p.tilt()) * p.z0 + t.K * (plus - minus);
}

std::vector<double> uniform_thetas(int n) {
  std::vector<double> thetas(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) thetas[k] = -kPi + 2.0 * kPi * (k + 1) / n;
  return thetas;
}

BoundaryCurve boundary_curve(const ClassParams& p, int n_samples, CurveMethod method,
                             const QuadratureConfig& cfg, unsigned threads) {
  p.validate();
  BoundaryCurve curve{p, {}, {}, method};
  if (p.z0 == Cx{} || p.unimodular_lambda()) {
    curve.points.push_back(degenerate_point(p));
    return curve;
  }
  if (n_samples < 16) throw InvalidParams("boundary_curve needs at least 16 samples");
  curve.thetas = uniform_thetas(n_samples);
  curve.points.resize(curve.thetas.size());
  parallel_for(curve.thetas.size(), threads, [&](std::size_t k) {
    curve.points[k] = method == CurveMethod::Quadrature
                          ? boundary_point_quadrature(curve.thetas[k], p, cfg)
                          : boundary_point_closed_form(curve.thetas[k], p);
  });
  return curve;
}

Cx degenerate_point(const ClassParams& p) {
  p.validate();
  if (p.z0 == Cx{}) return 0.0;
  if (!p.unimodular_lambda())
    throw InvalidParams("degenerate_point requires |lambda| = 1 or z0 = 0");
  return center_expression(p);
}

Cx interior_center(const ClassParams& p) {
  require_open_slice(p, "interior_center");
  if (p.lambda == Cx{}) return p.z0;
  return center_expression(p);
}

Cx interior_center_quadrature(const ClassParams& p, const QuadratureConfig& cfg) {
  require_open_slice(p, "interior_center_quadrature");
  const ExtremalIndex idx = ExtremalIndex::interior(0.0);
  return integrate_segment([&](Cx z) { return extremal_H(z, idx, p); }, 0.0, p.z0, cfg);
}

Cx member_value(const SampledMember& member, const QuadratureConfig& cfg) {
  return integrate_segment([&](Cx z) { return member(z); }, 0.0, member.params().z0, cfg);
}

}  // namespace varregion
