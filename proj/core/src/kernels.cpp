#include "varregion/kernels.hpp"

#include <string>

namespace varregion {

ClassParams ClassParams::make(double gamma, double beta, Cx lambda, Cx z0) {
  ClassParams p{gamma, beta, lambda, z0};
  p.validate();
  return p;
}

void ClassParams::validate() const {
  if (!std::isfinite(gamma) || !(std::abs(gamma) < kPi / 2))
    throw InvalidParams("gamma must satisfy |gamma| < pi/2");
  if (!std::isfinite(beta) || !(beta >= 0.0 && beta < 1.0))
    throw InvalidParams("beta must satisfy 0 <= beta < 1");
  require_finite(lambda, "lambda");
  require_finite(z0, "z0");
  // Unimodular lambda typed in as decimals lands a few ulps off the circle.
  if (std::abs(lambda) > 1.0 + 1e-14) throw InvalidParams("lambda must satisfy |lambda| <= 1");
  if (!(std::abs(z0) < 1.0)) throw InvalidParams("z0 must satisfy |z0| < 1");
}

Cx ClassParams::tilt() const {
  return 2.0 * (1.0 - beta) * std::cos(gamma) * unit(-gamma);
}

bool ClassParams::unimodular_lambda() const { return std::abs(std::abs(lambda) - 1.0) <= 1e-14; }

ExtremalIndex ExtremalIndex::from_theta(double theta) {
  if (!std::isfinite(theta)) throw InvalidParams("theta must be finite");
  const double t = normalize_angle(theta);
  return ExtremalIndex(unit(t), t);
}

ExtremalIndex ExtremalIndex::interior(Cx a) {
  require_finite(a, "extremal index");
  if (std::abs(a) > 1.0) throw InvalidParams("extremal index must satisfy |a| <= 1");
  return ExtremalIndex(a, a == Cx{} ? 0.0 : std::arg(a));
}

Cx mobius_delta(Cx z, Cx lambda) {
  const Cx den = 1.0 + std::conj(lambda) * z;
  if (std::abs(den) < 1e-15) throw PoleAtInput("mobius_delta: 1 + conj(lambda) z vanishes");
  return (z + lambda) / den;
}

Cx extremal_H(Cx z, const ExtremalIndex& idx, const ClassParams& p) {
  const Cx w = mobius_delta(idx.a() * z, p.lambda) * z;
  return 1.0 + p.tilt() * w / (1.0 - w);
}

Cx P_from_omega(Cx /*z*/, Cx omega_value, const ClassParams& p) {
  return 1.0 + p.tilt() * omega_value / (1.0 - omega_value);
}

SchwarzGenerator::SchwarzGenerator(Cx c, int k, std::vector<Cx> zeros)
    : c_(c), k_(k), zeros_(std::move(zeros)) {}

SchwarzGenerator SchwarzGenerator::zero() { return SchwarzGenerator(0.0, 1, {}); }

SchwarzGenerator SchwarzGenerator::monomial(Cx c, int k) { return blaschke(c, k, {}); }

SchwarzGenerator SchwarzGenerator::blaschke(Cx c, int k, std::vector<Cx> zeros) {
  require_finite(c, "generator coefficient");
  if (std::abs(c) > 1.0) throw InvalidParams("generator coefficient must satisfy |c| <= 1");
  if (k < 1) throw InvalidParams("generator power must be >= 1");
  for (Cx a : zeros) {
    require_finite(a, "Blaschke zero");
    if (!(std::abs(a) < 1.0)) throw InvalidParams("Blaschke zeros must lie in the open disk");
  }
  return SchwarzGenerator(c, k, std::move(zeros));
}

Cx SchwarzGenerator::operator()(Cx z) const {
  Cx v = c_ * std::pow(z, k_);
  for (Cx a : zeros_) v *= (z - a) / (1.0 - std::conj(a) * z);
  return v;
}

Cx SchwarzGenerator::derivative_at_zero() const {
  if (k_ > 1) return 0.0;
  Cx v = c_;
  for (Cx a : zeros_) v *= -a;
  return v;
}

SampledMember::SampledMember(SchwarzGenerator gen, ClassParams params)
    : gen_(std::move(gen)), params_(params) {}

Cx SampledMember::operator()(Cx z) const {
  const Cx omega = z * mobius_delta(gen_(z), params_.lambda);
  return P_from_omega(z, omega, params_);
}

SampledMember sample_member(const SchwarzGenerator& gen, const ClassParams& p) {
  p.validate();
  if (!(std::abs(p.lambda) < 1.0)) throw InvalidParams("sample_member requires |lambda| < 1");
  return SampledMember(gen, p);
}

Cx fd_first(const std::function<Cx(Cx)>& f, Cx z, double h) {
  auto d = [&](double s) { return (f(z + s) - f(z - s)) / (2.0 * s); };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

Cx fd_second(const std::function<Cx(Cx)>& f, Cx z, double h) {
  const Cx f0 = f(z);
  auto d = [&](double s) { return (f(z + s) - 2.0 * f0 + f(z - s)) / (s * s); };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

Cx expected_second_coefficient(const SchwarzGenerator& gen, const ClassParams& p) {
  const Cx a = gen.derivative_at_zero();
  const Cx lam = p.lambda;
  return 2.0 * p.tilt() * ((1.0 - std::norm(lam)) * a + lam * lam);
}

double check_second_coefficient(const SchwarzGenerator& gen, const ClassParams& p) {
  const SampledMember member = sample_member(gen, p);
  const Cx numeric = fd_second([&](Cx z) { return member(z); }, 0.0);
  return std::abs(numeric - expected_second_coefficient(gen, p));
}

}  // namespace varregion
