#pragma once

#include <functional>
#include <vector>

#include "varregion/types.hpp"

namespace varregion {

/// One problem instance: the class P_{gamma,beta}, the slice lambda fixing
/// the first Taylor coefficient, and the evaluation point z0.
///
/// Members of the class satisfy P(0) = 1, Re(e^{i gamma} P) > beta cos(gamma)
/// and P'(0) = 2(1-beta) e^{-i gamma} lambda cos(gamma).
struct ClassParams {
  double gamma = 0.0;
  double beta = 0.0;
  Cx lambda = 0.0;
  Cx z0 = 0.0;

  /// Validates |gamma| < pi/2, 0 <= beta < 1, |lambda| <= 1, |z0| < 1.
  static ClassParams make(double gamma, double beta, Cx lambda, Cx z0);
  void validate() const;

  /// 2(1-beta) e^{-i gamma} cos(gamma): the factor in front of every
  /// Schwarz-function term.
  Cx tilt() const;
  bool unimodular_lambda() const;
};

/// Parameter a of the kernel H_{a,lambda}; boundary kernels have |a| = 1.
class ExtremalIndex {
 public:
  static ExtremalIndex from_theta(double theta);
  /// Throws InvalidParams when |a| > 1.
  static ExtremalIndex interior(Cx a);

  Cx a() const { return a_; }
  /// Angle of a in (-pi, pi]; only meaningful for boundary indices.
  double theta() const { return theta_; }

 private:
  ExtremalIndex(Cx a, double theta) : a_(a), theta_(theta) {}
  Cx a_;
  double theta_;
};

/// Disk automorphism (z + lambda) / (1 + conj(lambda) z).
Cx mobius_delta(Cx z, Cx lambda);

/// H_{a,lambda}(z) = 1 + tilt * w / (1 - w) with w = delta(a z, lambda) z.
Cx extremal_H(Cx z, const ExtremalIndex& idx, const ClassParams& p);

/// The class member whose Schwarz function takes the value omega at z.
Cx P_from_omega(Cx z, Cx omega_value, const ClassParams& p);

/// Self-map g of the disk with g(0) = 0, stored as
///   g(z) = c z^k prod_j (z - a_j) / (1 - conj(a_j) z)
/// with |c| <= 1, k >= 1 and |a_j| < 1, so |g(z)| < 1 on the open disk.
class SchwarzGenerator {
 public:
  static SchwarzGenerator zero();
  static SchwarzGenerator monomial(Cx c, int k);
  static SchwarzGenerator blaschke(Cx c, int k, std::vector<Cx> zeros);

  Cx operator()(Cx z) const;
  /// g'(0).
  Cx derivative_at_zero() const;

  Cx coefficient() const { return c_; }
  int power() const { return k_; }
  const std::vector<Cx>& zeros() const { return zeros_; }

 private:
  SchwarzGenerator(Cx c, int k, std::vector<Cx> zeros);
  Cx c_;
  int k_;
  std::vector<Cx> zeros_;
};

/// P in P(lambda) built from a Schwarz generator g via the Schwarz function
/// omega(z) = z delta(g(z), lambda).
class SampledMember {
 public:
  SampledMember(SchwarzGenerator gen, ClassParams params);

  Cx operator()(Cx z) const;
  const SchwarzGenerator& generator() const { return gen_; }
  const ClassParams& params() const { return params_; }

 private:
  SchwarzGenerator gen_;
  ClassParams params_;
};

/// Requires |lambda| < 1.
SampledMember sample_member(const SchwarzGenerator& gen, const ClassParams& p);

/// First derivative of f at z by Richardson-extrapolated central differences.
Cx fd_first(const std::function<Cx(Cx)>& f, Cx z, double h = 1e-4);
/// Second derivative of f at z, same scheme.
Cx fd_second(const std::function<Cx(Cx)>& f, Cx z, double h = 1e-4);

/// 4(1-beta)[(1-|lambda|^2) a + lambda^2] e^{-i gamma} cos(gamma) for a = g'(0).
Cx expected_second_coefficient(const SchwarzGenerator& gen, const ClassParams& p);

/// |P''(0) by finite differences - expected_second_coefficient|.
double check_second_coefficient(const SchwarzGenerator& gen, const ClassParams& p);

}  // namespace varregion
