#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "varregion/kernels.hpp"
#include "varregion/quadrature.hpp"
#include "varregion/regions.hpp"
#include "varregion/rng.hpp"

namespace varregion {

/// Ranges random problem instances are drawn from.
struct ParamBox {
  double gamma_max = kPi / 2 - 0.05;
  double beta_min = 0.0;
  double beta_max = 0.98;
  double lambda_max = 0.95;
  double z0_min = 0.05;
  double z0_max = 0.95;

  void validate() const;
};

struct CampaignConfig {
  std::uint64_t seed = 42;
  int trials = 50;
  ParamBox box;
  int n_curve_samples = 720;
  std::map<std::string, double> tolerances = default_tolerances();
  unsigned threads = 1;

  /// Throws InvalidParams for trials < 1, n_curve_samples < 16 or a box
  /// reaching outside the class.
  void validate() const;
  double tol(const std::string& name) const;

  static std::map<std::string, double> default_tolerances();
};

/// Outcome of one trial. The margin is property specific; failing trials
/// have passed == false and usually a negative margin.
struct TrialResult {
  ClassParams params;
  double margin = 0.0;
  bool passed = true;
};

struct TrialContext {
  Rng& rng;
  const CampaignConfig& config;
  QuadratureConfig quad;
};

struct PropertyDef {
  std::string name;
  std::string module;
  std::string statement;
  std::function<TrialResult(TrialContext&)> run;
};

/// Every property checked by campaigns, in report order.
const std::vector<PropertyDef>& property_registry();

struct Failure {
  int trial;
  std::uint64_t stream_seed;
  ClassParams params;
  double margin;
};

struct PropertyOutcome {
  std::string name;
  std::string module;
  int passed = 0;
  int failed = 0;
  double worst_margin = 0.0;
  std::vector<Failure> failures;
};

struct CampaignReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<PropertyOutcome> properties;

  bool all_passed() const;
  /// Line-oriented summary; byte-identical for identical configs.
  std::string to_text() const;
  std::string to_json() const;
};

/// Runs every registered property for cfg.trials trials. Trials run on
/// cfg.threads workers; the report does not depend on the thread count.
CampaignReport run_campaign(const CampaignConfig& cfg);

/// Re-runs a single trial of a property; reproduces the reported margin.
TrialResult replay_trial(const std::string& property, const CampaignConfig& cfg, int trial);

/// Random instance inside the box.
ClassParams random_params(Rng& rng, const ParamBox& box);
/// Random c z^k times a Blaschke product with 0..2 zeros.
SchwarzGenerator random_generator(Rng& rng);

/// Signed distance of the integral of the member built from gen to the
/// boundary polygon of curve; positive inside.
double containment_trial(const ClassParams& p, const SchwarzGenerator& gen,
                         const BoundaryCurve& curve, const QuadratureConfig& cfg = {});

}  // namespace varregion
