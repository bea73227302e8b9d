#include "varregion/verify.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "varregion/bounds.hpp"
#include "varregion/geometry.hpp"
#include "varregion/io.hpp"
#include "varregion/parallel.hpp"
#include "varregion/subclasses.hpp"

namespace varregion {

namespace {

TrialResult check(const ClassParams& p, double margin) { return {p, margin, margin >= 0.0}; }

TrialResult check_strict(const ClassParams& p, double margin) { return {p, margin, margin > 0.0}; }

TrialResult check_bool(const ClassParams& p, bool ok) { return {p, ok ? 1.0 : -1.0, ok}; }

Cx random_point(Rng& rng, double rmax) { return rng.polar(0.0, rmax); }

BoundaryCurve closed_curve(const ClassParams& p, int n) {
  return boundary_curve(p, n, CurveMethod::ClosedForm);
}

struct Poly {
  std::vector<Cx> coeffs;
  Cx operator()(Cx z) const {
    Cx v = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) v = v * z + *it;
    return v;
  }
};

Poly random_poly(Rng& rng) {
  Poly p;
  const int degree = rng.uniform_int(0, 5);
  for (int i = 0; i <= degree; ++i) p.coeffs.push_back(rng.polar(0.0, 1.0));
  return p;
}

std::vector<Cx> radial_grid(int count, double rmax) {
  // count points on 8 rays, radii up to rmax.
  std::vector<Cx> grid;
  const int rays = 8;
  const int per_ray = count / rays;
  for (int j = 0; j < rays; ++j)
    for (int k = 1; k <= per_ray; ++k)
      grid.push_back(std::polar(rmax * k / per_ray, 2.0 * kPi * (j + 0.5) / rays));
  return grid;
}

// ---- numerics -------------------------------------------------------------

TrialResult quadrature_linearity(TrialContext& ctx) {
  const Poly f = random_poly(ctx.rng);
  const Poly g = random_poly(ctx.rng);
  const Cx alpha = ctx.rng.polar(0.0, 2.0);
  const Cx a = random_point(ctx.rng, 0.95);
  const Cx b = random_point(ctx.rng, 0.95);
  const Cx lhs = integrate_segment([&](Cx z) { return alpha * f(z) + g(z); }, a, b, ctx.quad);
  const Cx rhs = alpha * integrate_segment(f, a, b, ctx.quad) + integrate_segment(g, a, b, ctx.quad);
  return check({}, 10.0 * ctx.quad.abs_tol - std::abs(lhs - rhs));
}

TrialResult quadrature_additivity(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const ExtremalIndex idx = ExtremalIndex::interior(ctx.rng.polar(0.0, 1.0));
  const Cx a = random_point(ctx.rng, 0.95);
  const Cx c = random_point(ctx.rng, 0.95);
  const Cx b = a + ctx.rng.uniform() * (c - a);
  auto f = [&](Cx z) { return extremal_H(z, idx, p); };
  const Cx split = integrate_segment(f, a, b, ctx.quad) + integrate_segment(f, b, c, ctx.quad);
  const Cx whole = integrate_segment(f, a, c, ctx.quad);
  return check(p, 10.0 * ctx.quad.abs_tol - std::abs(split - whole));
}

TrialResult convex_midpoint_interior(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const BoundaryCurve curve = closed_curve(p, ctx.config.n_curve_samples);
  const Polygon poly = curve.polygon();
  if (!polygon_is_convex(poly, default_convexity_tol(poly))) return check_bool(p, false);
  const Cx center = interior_center(p);
  const std::size_t n = curve.points.size();
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 8; ++k) {
    const Cx u = center + ctx.rng.uniform(0.0, 0.95) * (curve.points[ctx.rng.next() % n] - center);
    const Cx v = center + ctx.rng.uniform(0.0, 0.95) * (curve.points[ctx.rng.next() % n] - center);
    if (point_in_polygon(poly, u) <= 0.0 || point_in_polygon(poly, v) <= 0.0) continue;
    worst = std::min(worst, point_in_polygon(poly, 0.5 * (u + v)));
  }
  return check_strict(p, worst);
}

TrialResult orientation_independence(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const BoundaryCurve curve = closed_curve(p, ctx.config.n_curve_samples);
  const Polygon forward(curve.points);
  const Polygon backward(std::vector<Cx>(curve.points.rbegin(), curve.points.rend()));
  const Cx center = interior_center(p);
  const double scale = forward.diameter();
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 16; ++k) {
    const Cx w = center + ctx.rng.polar(0.0, scale);
    const double a = point_in_polygon(forward, w);
    const double b = point_in_polygon(backward, w);
    const double margin = (a > 0) == (b > 0) ? 1e-14 * std::max(scale, 1.0) - std::abs(a - b) : -1.0;
    worst = std::min(worst, margin);
  }
  return check(p, worst);
}

// ---- kernels --------------------------------------------------------------

double half_plane_margin(Cx value, const ClassParams& p) {
  return (unit(p.gamma) * value).real() - p.beta * std::cos(p.gamma);
}

TrialResult kernel_half_plane(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 64; ++k) {
    const ExtremalIndex idx = ExtremalIndex::interior(ctx.rng.polar(0.0, 1.0));
    const Cx z = random_point(ctx.rng, 0.999);
    worst = std::min(worst, half_plane_margin(extremal_H(z, idx, p), p));
  }
  return check_strict(p, worst);
}

TrialResult member_half_plane(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const SampledMember member = sample_member(random_generator(ctx.rng), p);
  double worst = std::numeric_limits<double>::infinity();
  for (Cx z : radial_grid(64, 0.99)) worst = std::min(worst, half_plane_margin(member(z), p));
  return check_strict(p, worst);
}

TrialResult kernel_normalization(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const ExtremalIndex idx = ExtremalIndex::interior(ctx.rng.polar(0.0, 1.0));
  const Cx numeric = fd_first([&](Cx z) { return extremal_H(z, idx, p); }, 0.0);
  return check(p, ctx.config.tol("derivative_first") - std::abs(numeric - p.tilt() * p.lambda));
}

TrialResult unimodular_collapse(TrialContext& ctx) {
  ClassParams p = random_params(ctx.rng, ctx.config.box);
  p.lambda = unit(ctx.rng.uniform(-kPi, kPi));
  const ExtremalIndex a = ExtremalIndex::interior(ctx.rng.polar(0.0, 1.0));
  const ExtremalIndex b = ExtremalIndex::interior(ctx.rng.polar(0.0, 1.0));
  // Rounding in delta is amplified by 1/|1 - w|^2; |z| <= 1/2 keeps that below 4.
  double worst = 0.0;
  for (Cx z : radial_grid(32, 0.5))
    worst = std::max(worst, std::abs(extremal_H(z, a, p) - extremal_H(z, b, p)));
  return check(p, ctx.config.tol("collapse") - worst);
}

TrialResult mobius_inverse(TrialContext& ctx) {
  const Cx lambda = ctx.rng.polar(0.0, ctx.config.box.lambda_max);
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Cx z = random_point(ctx.rng, 1.0);
    worst = std::max(worst, std::abs(mobius_delta(mobius_delta(z, lambda), -lambda) - z));
  }
  return check(ClassParams{0.0, 0.0, lambda, 0.0}, ctx.config.tol("mobius") - worst);
}

// ---- regions --------------------------------------------------------------

TrialResult dual_route(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  double worst = 0.0;
  for (double theta : uniform_thetas(64))
    worst = std::max(worst, std::abs(boundary_point_closed_form(theta, p) -
                                     boundary_point_quadrature(theta, p, ctx.quad)));
  return check(p, ctx.config.tol("dual_route") - worst);
}

TrialResult boundary_convexity(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const Polygon poly = closed_curve(p, ctx.config.n_curve_samples).polygon();
  return check_bool(p, polygon_is_convex(poly, default_convexity_tol(poly)));
}

TrialResult boundary_simplicity(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const Polygon poly = closed_curve(p, ctx.config.n_curve_samples).polygon();
  return check_bool(p, polygon_is_simple(poly, 1e-12 * poly.diameter()));
}

TrialResult center_interiority(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const Polygon poly = closed_curve(p, ctx.config.n_curve_samples).polygon();
  return check_strict(p, point_in_polygon(poly, interior_center(p)));
}

std::vector<Cx> member_values(TrialContext& ctx, const ClassParams& p, int count) {
  std::vector<Cx> values;
  values.reserve(count);
  for (int k = 0; k < count; ++k)
    values.push_back(member_value(sample_member(random_generator(ctx.rng), p), ctx.quad));
  return values;
}

TrialResult member_containment(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const BoundaryCurve curve = closed_curve(p, ctx.config.n_curve_samples);
  const Polygon poly = curve.polygon();
  const double gap = curve.max_gap();
  double worst = std::numeric_limits<double>::infinity();
  for (Cx w : member_values(ctx, p, 200)) worst = std::min(worst, point_in_polygon(poly, w) + gap);
  return check(p, worst);
}

TrialResult boundary_extremality(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const BoundaryCurve curve = closed_curve(p, ctx.config.n_curve_samples);
  const double gap = curve.max_gap();
  std::vector<Cx> cloud = member_values(ctx, p, 200);
  cloud.insert(cloud.end(), curve.points.begin(), curve.points.end());
  const Polygon hull(convex_hull(cloud));
  double deepest = -std::numeric_limits<double>::infinity();
  for (Cx w : curve.points) deepest = std::max(deepest, point_in_polygon(hull, w));
  return check(p, gap - deepest);
}

TrialResult theta_continuity(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const int n = ctx.config.n_curve_samples;
  const double fine = closed_curve(p, 2 * n).max_gap() * (2 * n);
  const double calibrated = 1.5 * fine;
  return check(p, calibrated / n - closed_curve(p, n).max_gap());
}

// ---- bounds ---------------------------------------------------------------

TrialResult membership_bound(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  double worst = std::numeric_limits<double>::infinity();
  for (int m = 0; m < 4; ++m) {
    const SampledMember member = sample_member(random_generator(ctx.rng), p);
    for (int k = 0; k < 16; ++k) {
      const Cx z = random_point(ctx.rng, 0.99);
      const GrowthBound gb = growth_bound(z, p);
      worst = std::min(worst, gb.r + ctx.config.tol("membership") - std::abs(member(z) - gb.c));
    }
  }
  return check(p, worst);
}

TrialResult membership_strictness(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const SampledMember member =
      sample_member(SchwarzGenerator::monomial(ctx.rng.polar(0.0, 0.5), 2), p);
  double worst = std::numeric_limits<double>::infinity();
  for (int k = 0; k < 16; ++k) {
    const Cx z = ctx.rng.polar(0.05, 0.9);
    const GrowthBound gb = growth_bound(z, p);
    worst = std::min(worst, gb.r - std::abs(member(z) - gb.c));
  }
  return check_strict(p, worst);
}

TrialResult mobius_triple_identity(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Cx z = ctx.rng.polar(0.05, 0.9);
    if (std::abs(z - std::conj(p.lambda)) < 1e-3) continue;
    const MobiusTriple t = mobius_triple(z, p);
    const GrowthBound gb = growth_bound(z, p);
    const double zt2 = std::norm(z) * std::norm(t.tau);
    const Cx c = (t.A + zt2 * t.B) / (1.0 - zt2);
    const double r = std::abs(z) * std::abs(t.tau) * std::abs(t.A + t.B) / (1.0 - zt2);
    worst = std::max({worst, std::abs(c - gb.c), std::abs(r - gb.r)});
  }
  return check(p, ctx.config.tol("identity") - worst);
}

TrialResult enclosure(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  const DiskBound disk = enclosure_disk(p, ctx.quad);
  double worst = -std::numeric_limits<double>::infinity();
  for (Cx w : closed_curve(p, ctx.config.n_curve_samples).points)
    worst = std::max(worst, std::abs(w - disk.center) - disk.radius);
  return check(p, ctx.config.tol("enclosure") - worst);
}

TrialResult tau_identity(TrialContext& ctx) {
  const ClassParams p = random_params(ctx.rng, ctx.config.box);
  double worst = 0.0;
  for (int k = 0; k < 16; ++k) {
    const Cx z = ctx.rng.polar(0.05, 0.95);
    if (std::abs(z - std::conj(p.lambda)) < 1e-3) continue;
    const MobiusTriple t = mobius_triple(z, p);
    const double lhs = 1.0 - std::norm(z) * std::norm(t.tau);
    const double rhs = (1.0 - std::norm(z)) * (1.0 + std::norm(z) - 2.0 * (p.lambda * z).real()) /
                       std::norm(1.0 - p.lambda * z);
    worst = std::max(worst, std::abs(lhs - rhs));
  }
  return check(p, ctx.config.tol("identity") - worst);
}

// ---- subclasses -----------------------------------------------------------

SubclassParamsF random_f_params(Rng& rng, const ClassParams& p) {
  return {Cx(rng.uniform(0.2, 3.0), rng.uniform(-1.0, 1.0)), p.beta, p.lambda, p.z0};
}

TrialResult subclass_coherence(TrialContext& ctx) {
  ClassParams p = random_params(ctx.rng, ctx.config.box);
  p.gamma = 0.0;
  const SubclassParamsR pr{p.beta, p.lambda, p.z0};
  const SubclassParamsF pf = random_f_params(ctx.rng, p);
  double worst = 0.0;
  for (double theta : uniform_thetas(64)) {
    const Cx reference = boundary_point_closed_form(theta, p);
    worst = std::max({worst, std::abs(vR_boundary_point(theta, pr, ctx.quad) - reference),
                      std::abs(vG_boundary_point(theta, pf) - reference)});
  }
  return check(p, ctx.config.tol("subclass") - worst);
}

Cx fd_third(const std::function<Cx(Cx)>& f, double h) {
  auto d = [&](double s) { return (f(2 * s) - 2.0 * f(s) + 2.0 * f(-s) - f(-2 * s)) / (2 * s * s * s); };
  return (4.0 * d(h / 2) - d(h)) / 3.0;
}

TrialResult second_derivative_constraint(TrialContext& ctx) {
  ClassParams p = random_params(ctx.rng, ctx.config.box);
  p.lambda = 0.0;
  const SubclassParamsF pf = random_f_params(ctx.rng, p);
  const Cx a = ctx.rng.polar(0.0, 1.0);
  const Cx second = fd_second([&](Cx z) { return F_a0(z, a, pf, ctx.quad); }, 0.0, 1e-2);
  return check(p, ctx.config.tol("derivative_second") - std::abs(second));
}

TrialResult third_derivative_constraint(TrialContext& ctx) {
  ClassParams p = random_params(ctx.rng, ctx.config.box);
  p.lambda = 0.0;
  const SubclassParamsF pf = random_f_params(ctx.rng, p);
  const Cx a = ctx.rng.polar(0.0, 1.0);
  const Cx third = fd_third([&](Cx z) { return F_a0(z, a, pf, ctx.quad); }, 2e-2);
  const Cx expected = 4.0 * a * (1.0 - pf.beta) / (1.0 + 2.0 * pf.alpha);
  return check(p, ctx.config.tol("derivative_third") - std::abs(third - expected));
}

TrialResult sup_monotone(TrialContext& ctx) {
  const double beta = ctx.rng.uniform(0.0, 0.5);
  const double inner = rbeta_sup_bound_check(beta, 0.99, 64).sup_value;
  const double outer = rbeta_sup_bound_check(beta, 0.999, 64).sup_value;
  return check(ClassParams{0.0, beta, 0.0, 0.0}, outer - inner);
}

// ---- documents ------------------------------------------------------------

OutputDocument random_document(TrialContext& ctx, ClassParams& p) {
  p = random_params(ctx.rng, ctx.config.box);
  return curve_document(params_metadata("P", p), closed_curve(p, 64));
}

TrialResult document_round_trip(TrialContext& ctx) {
  ClassParams p;
  const OutputDocument doc = random_document(ctx, p);
  std::istringstream csv(to_csv(doc));
  std::istringstream json(to_json(doc));
  const OutputDocument from_csv = read_curve_csv(csv);
  const OutputDocument from_json = read_json(json);
  return check_bool(p, from_csv.samples == doc.samples && from_json.samples == doc.samples &&
                           from_json.meta == doc.meta);
}

TrialResult svg_purity(TrialContext& ctx) {
  ClassParams p;
  const OutputDocument doc = random_document(ctx, p);
  std::istringstream json(to_json(doc));
  const std::string first = to_svg(doc);
  return check_bool(p, first == to_svg(doc) && first == to_svg(read_json(json)));
}

std::vector<PropertyDef> build_registry() {
  return {
      {"quadrature_linearity", "numerics", "integral of (alpha f + g) = alpha int f + int g", quadrature_linearity},
      {"quadrature_additivity", "numerics", "int[a,b] + int[b,c] = int[a,c] on collinear points", quadrature_additivity},
      {"convex_midpoint_interior", "numerics", "midpoints of interior points of a convex polygon are interior", convex_midpoint_interior},
      {"orientation_independence", "numerics", "point_in_polygon ignores vertex orientation", orientation_independence},
      {"kernel_half_plane", "kernels", "Re(e^{i gamma} H) > beta cos gamma", kernel_half_plane},
      {"member_half_plane", "kernels", "sampled members satisfy the half-plane condition", member_half_plane},
      {"kernel_normalization", "kernels", "H'(0) = tilt * lambda", kernel_normalization},
      {"unimodular_collapse", "kernels", "|lambda| = 1 makes H independent of a", unimodular_collapse},
      {"mobius_inverse", "kernels", "delta(delta(z, lambda), -lambda) = z", mobius_inverse},
      {"dual_route_agreement", "regions", "closed form matches quadrature on the boundary", dual_route},
      {"boundary_convexity", "regions", "boundary polygon is convex", boundary_convexity},
      {"boundary_simplicity", "regions", "boundary polygon is simple", boundary_simplicity},
      {"center_interiority", "regions", "integral of H_{0,lambda} is interior", center_interiority},
      {"member_containment", "regions", "member integrals lie in the region", member_containment},
      {"boundary_extremality", "regions", "boundary points are extreme for the member cloud", boundary_extremality},
      {"theta_continuity", "regions", "adjacent samples differ by O(1/n)", theta_continuity},
      {"membership_bound", "bounds", "|P(z) - c| <= r for members", membership_bound},
      {"membership_strictness", "bounds", "strict inequality when |g(z)| < |z|", membership_strictness},
      {"mobius_triple_identity", "bounds", "c and r assembled from A, B, tau", mobius_triple_identity},
      {"enclosure", "bounds", "boundary lies in the segment enclosure disk", enclosure},
      {"tau_identity", "bounds", "1 - |z|^2 |tau|^2 factorization", tau_identity},
      {"subclass_coherence", "subclasses", "V_R and V_G equal V_P at gamma = 0", subclass_coherence},
      {"second_derivative_constraint", "subclasses", "F_{a,0}''(0) = 0", second_derivative_constraint},
      {"third_derivative_constraint", "subclasses", "F_{a,0}'''(0) = 4a(1-beta)/(1+2 alpha)", third_derivative_constraint},
      {"sup_bound_monotone", "subclasses", "grid sup grows with the grid radius", sup_monotone},
      {"document_round_trip", "io", "CSV and JSON documents read back exactly", document_round_trip},
      {"svg_purity", "io", "SVG is a pure function of the curve document", svg_purity},
  };
}

const PropertyDef& find_property(const std::string& name) {
  for (const auto& def : property_registry())
    if (def.name == name) return def;
  throw InvalidParams("unknown property '" + name + "'");
}

TrialResult run_one(const PropertyDef& def, const CampaignConfig& cfg, int trial,
                    const QuadratureConfig& quad) {
  Rng rng(stream_seed(cfg.seed, def.name, static_cast<std::uint64_t>(trial)));
  TrialContext ctx{rng, cfg, quad};
  try {
    return def.run(ctx);
  } catch (const Error&) {
    // Errors are recorded as failures; the campaign keeps going.
    return {{}, -std::numeric_limits<double>::infinity(), false};
  }
}

std::string params_text(const ClassParams& p) {
  return "gamma=" + format_double(p.gamma) + " beta=" + format_double(p.beta) +
         " lambda=" + format_double(p.lambda.real()) + "," + format_double(p.lambda.imag()) +
         " z0=" + format_double(p.z0.real()) + "," + format_double(p.z0.imag());
}

}  // namespace

void ParamBox::validate() const {
  if (!(gamma_max >= 0.0 && gamma_max < kPi / 2)) throw InvalidParams("gamma range leaves the class");
  if (!(beta_min >= 0.0 && beta_min <= beta_max && beta_max < 1.0))
    throw InvalidParams("beta range leaves the class");
  if (!(lambda_max >= 0.0 && lambda_max < 1.0)) throw InvalidParams("lambda range leaves the slice");
  if (!(z0_min > 0.0 && z0_min <= z0_max && z0_max < 1.0)) throw InvalidParams("z0 range leaves the disk");
}

void CampaignConfig::validate() const {
  if (trials < 1) throw InvalidParams("trials must be >= 1");
  if (n_curve_samples < 16) throw InvalidParams("n_curve_samples must be >= 16");
  box.validate();
}

double CampaignConfig::tol(const std::string& name) const {
  const auto it = tolerances.find(name);
  if (it == tolerances.end()) throw InvalidParams("unknown tolerance '" + name + "'");
  return it->second;
}

std::map<std::string, double> CampaignConfig::default_tolerances() {
  return {{"dual_route", 1e-9},      {"membership", 1e-10},       {"identity", 1e-12},
          {"enclosure", 1e-9},       {"subclass", 1e-10},         {"collapse", 1e-14},
          {"mobius", 1e-14},         {"derivative_first", 1e-7},  {"derivative_second", 1e-6},
          {"derivative_third", 1e-5}};
}

const std::vector<PropertyDef>& property_registry() {
  static const std::vector<PropertyDef> registry = build_registry();
  return registry;
}

bool CampaignReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyOutcome& o) { return o.failed == 0; });
}

std::string CampaignReport::to_text() const {
  std::ostringstream out;
  out << "campaign seed=" << seed << " trials=" << trials << '\n';
  for (const auto& o : properties) {
    out << (o.failed == 0 ? "PASS " : "FAIL ") << o.module << '/' << o.name << " passed=" << o.passed
        << " failed=" << o.failed << " worst_margin=" << format_double(o.worst_margin) << '\n';
    for (const auto& f : o.failures)
      out << "  trial=" << f.trial << " stream=" << f.stream_seed << ' ' << params_text(f.params)
          << " margin=" << format_double(f.margin) << '\n';
  }
  out << (all_passed() ? "all properties passed\n" : "property violations found\n");
  return out.str();
}

std::string CampaignReport::to_json() const {
  std::ostringstream out;
  out << "{\n  \"meta\": {\"kind\": \"report\", \"tool_version\": " << json_quote(kToolVersion)
      << ", \"seed\": " << seed << ", \"trials\": " << trials
      << ", \"all_passed\": " << (all_passed() ? "true" : "false") << "},\n  \"properties\": [";
  for (std::size_t i = 0; i < properties.size(); ++i) {
    const auto& o = properties[i];
    out << (i == 0 ? "\n" : ",\n") << "    {\"name\": " << json_quote(o.name)
        << ", \"module\": " << json_quote(o.module) << ", \"passed\": " << o.passed
        << ", \"failed\": " << o.failed << ", \"worst_margin\": ";
    if (std::isfinite(o.worst_margin)) {
      out << format_double(o.worst_margin);
    } else {
      out << "null";
    }
    out << ", \"failures\": [";
    for (std::size_t k = 0; k < o.failures.size(); ++k) {
      const auto& f = o.failures[k];
      out << (k == 0 ? "" : ", ") << "{\"trial\": " << f.trial << ", \"stream\": " << f.stream_seed
          << ", \"gamma\": " << format_double(f.params.gamma)
          << ", \"beta\": " << format_double(f.params.beta)
          << ", \"lambda\": [" << format_double(f.params.lambda.real()) << ", "
          << format_double(f.params.lambda.imag()) << "], \"z0\": ["
          << format_double(f.params.z0.real()) << ", " << format_double(f.params.z0.imag())
          << "], \"margin\": ";
      if (std::isfinite(f.margin)) {
        out << format_double(f.margin);
      } else {
        out << "null";
      }
      out << "}";
    }
    out << "]}";
  }
  out << "\n  ]\n}\n";
  return out.str();
}

CampaignReport run_campaign(const CampaignConfig& cfg) {
  cfg.validate();
  const QuadratureConfig quad = config_from_env();
  const auto& registry = property_registry();
  const std::size_t trials = static_cast<std::size_t>(cfg.trials);
  std::vector<TrialResult> results(registry.size() * trials);
  parallel_for(results.size(), cfg.threads, [&](std::size_t i) {
    results[i] = run_one(registry[i / trials], cfg, static_cast<int>(i % trials), quad);
  });

  CampaignReport report{cfg.seed, cfg.trials, {}};
  for (std::size_t d = 0; d < registry.size(); ++d) {
    PropertyOutcome outcome{registry[d].name, registry[d].module, 0, 0,
                            std::numeric_limits<double>::infinity(), {}};
    for (std::size_t t = 0; t < trials; ++t) {
      const TrialResult& r = results[d * trials + t];
      outcome.worst_margin = std::min(outcome.worst_margin, r.margin);
      if (r.passed) {
        ++outcome.passed;
      } else {
        ++outcome.failed;
        outcome.failures.push_back({static_cast<int>(t),
                                    stream_seed(cfg.seed, registry[d].name, t), r.params, r.margin});
      }
    }
    report.properties.push_back(std::move(outcome));
  }
  return report;
}

TrialResult replay_trial(const std::string& property, const CampaignConfig& cfg, int trial) {
  cfg.validate();
  if (trial < 0) throw InvalidParams("trial index must be >= 0");
  return run_one(find_property(property), cfg, trial, config_from_env());
}

ClassParams random_params(Rng& rng, const ParamBox& box) {
  ClassParams p;
  p.gamma = rng.uniform(-box.gamma_max, box.gamma_max);
  p.beta = rng.uniform(box.beta_min, box.beta_max);
  p.lambda = rng.polar(0.0, box.lambda_max);
  p.z0 = rng.polar(box.z0_min, box.z0_max);
  return p;
}

SchwarzGenerator random_generator(Rng& rng) {
  const Cx c = rng.uniform() < 0.5 ? unit(rng.uniform(-kPi, kPi)) : rng.polar(0.0, 1.0);
  const int k = rng.uniform_int(1, 3);
  std::vector<Cx> zeros(static_cast<std::size_t>(rng.uniform_int(0, 2)));
  for (Cx& a : zeros) a = rng.polar(0.0, 0.9);
  return SchwarzGenerator::blaschke(c, k, std::move(zeros));
}

double containment_trial(const ClassParams& p, const SchwarzGenerator& gen,
                         const BoundaryCurve& curve, const QuadratureConfig& cfg) {
  return point_in_polygon(curve.polygon(), member_value(sample_member(gen, p), cfg));
}

}  // namespace varregion
