#include "varregion/bounds.hpp"

#include <array>
#include <limits>

namespace varregion {

namespace {

void require_in_disk(Cx z) {
  require_finite(z, "z");
  if (!(std::abs(z) < 1.0)) throw InvalidParams("z must lie in the open unit disk");
}

Cx lemma_integrand(Cx s, Cx rot, Cx lambda) {
  const Cx den = 1.0 + (std::conj(lambda) * rot - lambda) * s - rot * s * s;
  return rot * s * s / (den * den);
}

// Cube root of q closest to `previous`.
Cx nearest_cube_root(Cx q, Cx previous) {
  const Cx principal = std::pow(q, 1.0 / 3.0);
  const std::array<Cx, 3> roots = {principal, principal * unit(2.0 * kPi / 3.0),
                                   principal * unit(-2.0 * kPi / 3.0)};
  Cx best = roots[0];
  for (Cx r : roots)
    if (std::abs(r - previous) < std::abs(best - previous)) best = r;
  return best;
}

constexpr int kRaySteps = 32;

// Cube root of 3 e^{-i theta} G(z) / z^3 continued from 1 along the ray.
Cx ray_root(Cx z, double theta, Cx lambda, const QuadratureConfig& cfg) {
  const Cx rot = unit(theta);
  auto f = [&](Cx s) { return lemma_integrand(s, rot, lambda); };
  Cx root = 1.0;
  Cx g = 0.0;
  Cx prev_point = 0.0;
  for (int j = 1; j <= kRaySteps; ++j) {
    const Cx point = z * (static_cast<double>(j) / kRaySteps);
    g += integrate_segment(f, prev_point, point, cfg);
    prev_point = point;
    root = nearest_cube_root(3.0 * std::conj(rot) * g / (point * point * point), root);
  }
  return root;
}

}  // namespace

Path Path::segment(Cx end) {
  return {[end](double t) { return t * end; }, [end](double) { return end; }};
}

GrowthBound growth_bound(Cx z, const ClassParams& p) {
  require_in_disk(z);
  p.validate();
  const Cx lam = p.lambda;
  const double z2 = std::norm(z);
  const Cx w = (unit(-p.gamma) - 2.0 * p.beta * std::cos(p.gamma)) * unit(-p.gamma);
  const double den = (1.0 - z2) * (1.0 + z2 - 2.0 * (lam * z).real());
  const Cx num = (1.0 + lam * z * w) * (1.0 - std::conj(lam * z)) +
                 z2 * (std::conj(z) - lam) * (std::conj(lam) + z * w);
  const double r =
      2.0 * (1.0 - std::norm(lam)) * (1.0 - p.beta) * z2 * std::cos(p.gamma) / den;
  return {num / den, std::max(r, 0.0)};
}

GrowthBound growth_bound_lambda0(Cx z, const ClassParams& p) {
  require_in_disk(z);
  p.validate();
  if (p.lambda != Cx{}) throw InvalidParams("growth_bound_lambda0 requires lambda = 0");
  if (p.gamma != 0.0) throw InvalidParams("growth_bound_lambda0 requires gamma = 0");
  const double z4 = std::norm(z) * std::norm(z);
  return {(1.0 + (1.0 - 2.0 * p.beta) * z4) / (1.0 - z4),
          2.0 * (1.0 - p.beta) * std::norm(z) / (1.0 - z4)};
}

MobiusTriple mobius_triple(Cx z, const ClassParams& p) {
  require_in_disk(z);
  p.validate();
  const Cx lam = p.lambda;
  const Cx e = unit(-p.gamma);
  const Cx w = e - 2.0 * p.beta * std::cos(p.gamma);
  const Cx one_minus = 1.0 - lam * z;
  const Cx shifted = z - std::conj(lam);
  if (std::abs(one_minus) < 1e-15 || std::abs(shifted) < 1e-15)
    throw PoleAtInput("mobius_triple: z at a pole of A, B or tau");
  return {(1.0 + e * lam * z * w) / one_minus, (std::conj(lam) + e * z * w) / shifted,
          shifted / one_minus};
}

DiskBound enclosure_disk(const ClassParams& p, const Path& path, const QuadratureConfig& cfg) {
  p.validate();
  const Cx center = integrate_real(
      [&](double t) { return growth_bound(path.point(t), p).c * path.velocity(t); }, 0.0, 1.0, cfg);
  const Cx radius = integrate_real(
      [&](double t) {
        return Cx(growth_bound(path.point(t), p).r * std::abs(path.velocity(t)), 0.0);
      },
      0.0, 1.0, cfg);
  return {center, radius.real()};
}

DiskBound enclosure_disk(const ClassParams& p, const QuadratureConfig& cfg) {
  return enclosure_disk(p, Path::segment(p.z0), cfg);
}

Cx lemma_G(Cx z, double theta, Cx lambda, const QuadratureConfig& cfg) {
  require_in_disk(z);
  require_in_disk(lambda);
  const Cx rot = unit(theta);
  return integrate_segment([&](Cx s) { return lemma_integrand(s, rot, lambda); }, 0.0, z, cfg);
}

Cx lemma_G0(Cx z, double theta, Cx lambda, const QuadratureConfig& cfg) {
  require_in_disk(z);
  require_in_disk(lambda);
  if (std::abs(z) < 1e-3) throw BranchAmbiguity("G0 branch is unstable for |z| < 1e-3");
  return z * ray_root(z, theta, lambda, cfg);
}

double lemma_G0_starlike_check(double theta, Cx lambda, std::span<const Cx> grid,
                               const QuadratureConfig& cfg) {
  require_in_disk(lambda);
  const Cx rot = unit(theta);
  auto f = [&](Cx s) { return lemma_integrand(s, rot, lambda); };
  double worst = std::numeric_limits<double>::infinity();
  for (Cx z : grid) {
    require_in_disk(z);
    if (std::abs(z) < 1e-3) throw BranchAmbiguity("grid point too close to 0 for G0 branch");
    const Cx root = ray_root(z, theta, lambda, cfg);
    const Cx g0 = z * root;
    const Cx gz = lemma_G(z, theta, lambda, cfg);
    const double h = 1e-5 * std::abs(z);
    auto g0_at = [&](Cx point) {
      const Cx g = gz + integrate_segment(f, z, point, cfg);
      return point * nearest_cube_root(3.0 * std::conj(rot) * g / (point * point * point), root);
    };
    const Cx derivative = (g0_at(z + h) - g0_at(z - h)) / (2.0 * h);
    worst = std::min(worst, (z * derivative / g0).real());
  }
  return worst;
}

}  // namespace varregion
