#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "varregion/bounds.hpp"
#include "varregion/io.hpp"
#include "varregion/regions.hpp"
#include "varregion/subclasses.hpp"
#include "varregion/verify.hpp"

namespace varregion::cli {

namespace {

struct Table1Row {
  Cx z0;
  Cx lambda;
  double beta;
  double gamma;
};

constexpr Table1Row kTable1[] = {
    {{0.335192, -0.787333}, {0.0737292, 0.466706}, 0.591244, 0.383292},
    {{-0.261209, 0.926935}, {-0.28588, 0.307498}, 0.700318, -0.87825},
    {{-0.41227, -0.521734}, {-0.0875648, 0.0714166}, 0.602203, 0.910581},
    {{0.771264, 0.151204}, {-0.391149, -0.294747}, 0.928608, 1.55854},
    {{0.335626, 0.929093}, {0.00010443, 0.0255256}, 0.76622, 1.5449},
};

Cx parse_complex(const std::string& text, const char* flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos)
    throw InvalidParams(std::string(flag) + " expects RE,IM");
  auto number = [&](const std::string& s) {
    std::size_t used = 0;
    double v = 0.0;
    try {
      v = std::stod(s, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (s.empty() || used != s.size() || !std::isfinite(v))
      throw InvalidParams(std::string(flag) + " expects RE,IM with finite decimals");
    return v;
  };
  return {number(text.substr(0, comma)), number(text.substr(comma + 1))};
}

struct Options {
  std::string klass = "P";
  double gamma = 0.0;
  double beta = 0.0;
  std::string alpha = "1,0";
  std::string lambda = "0,0";
  std::string z0 = "0.5,0";
  std::string z = "0,0";
  int samples = 720;
  std::string method = "closed";
  std::string format;
  std::string out;
  std::uint64_t seed = 42;
  int trials = 50;
  unsigned threads = 0;
};

ClassParams class_params(const Options& o) {
  if (o.klass != "P" && o.gamma != 0.0)
    throw InvalidParams("--gamma must be 0 for --class " + o.klass);
  return ClassParams::make(o.gamma, o.beta, parse_complex(o.lambda, "--lambda"),
                           parse_complex(o.z0, "--z0"));
}

SubclassParamsF f_params(const Options& o, const ClassParams& p) {
  SubclassParamsF pf{parse_complex(o.alpha, "--alpha"), p.beta, p.lambda, p.z0};
  pf.validate();
  return pf;
}

Metadata base_metadata(const Options& o, const ClassParams& p) {
  Metadata m = params_metadata(o.klass, p);
  if (o.klass == "G") {
    const Cx alpha = parse_complex(o.alpha, "--alpha");
    m.set("alpha_re", alpha.real()).set("alpha_im", alpha.imag());
  }
  return m;
}

void emit(const OutputDocument& doc, const std::string& format, const std::string& path,
          std::ostream& out) {
  std::ostringstream buffer;
  if (format == "csv") {
    write_csv(doc, buffer);
  } else if (format == "json") {
    write_json(doc, buffer);
  } else if (format == "svg") {
    write_svg(doc, buffer);
  } else {
    throw InvalidParams("--format must be csv, json or svg");
  }
  if (path.empty()) {
    out << buffer.str();
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw InvalidParams("cannot open output file '" + path + "'");
  file << buffer.str();
}

std::optional<CurveMethod> parse_method(const std::string& m) {
  if (m == "closed") return CurveMethod::ClosedForm;
  if (m == "quadrature") return CurveMethod::Quadrature;
  if (m == "both") return std::nullopt;
  throw InvalidParams("--method must be closed, quadrature or both");
}

BoundaryCurve curve_for(const Options& o, const ClassParams& p, CurveMethod method,
                        const QuadratureConfig& quad) {
  if (o.klass == "R" && method == CurveMethod::Quadrature && !p.unimodular_lambda() && p.z0 != Cx{})
    return vR_boundary({p.beta, p.lambda, p.z0}, o.samples, quad, o.threads);
  if (o.klass == "G" && method == CurveMethod::ClosedForm && !p.unimodular_lambda() && p.z0 != Cx{})
    return vG_boundary_closed_form(f_params(o, p), o.samples);
  return boundary_curve(p, o.samples, method, quad, o.threads);
}

int cmd_boundary(const Options& o, std::ostream& out, std::ostream& err) {
  const ClassParams p = class_params(o);
  if (o.klass == "G") f_params(o, p);
  const std::string format = o.format.empty() ? "csv" : o.format;
  const QuadratureConfig quad = config_from_env();
  const auto method = parse_method(o.method);
  Metadata meta = base_metadata(o, p);
  meta.set("method", o.method);
  if (method) {
    emit(curve_document(meta, curve_for(o, p, *method, quad)), format, o.out, out);
    return kOk;
  }
  const BoundaryCurve closed = curve_for(o, p, CurveMethod::ClosedForm, quad);
  const BoundaryCurve quadrature = curve_for(o, p, CurveMethod::Quadrature, quad);
  double deviation = 0.0;
  for (std::size_t k = 0; k < closed.points.size(); ++k)
    deviation = std::max(deviation, std::abs(closed.points[k] - quadrature.points[k]));
  meta.set("max_deviation", deviation);
  OutputDocument doc = curve_document(meta, closed);
  if (doc.kind == DocumentKind::Curve)
    for (std::size_t k = 0; k < quadrature.points.size(); ++k)
      doc.secondary.push_back({quadrature.thetas[k], quadrature.points[k]});
  emit(doc, format, o.out, out);
  err << "max_deviation=" << format_double(deviation) << '\n';
  return kOk;
}

int cmd_point(const Options& o, std::ostream& out) {
  const ClassParams p = class_params(o);
  Metadata meta = base_metadata(o, p);
  const bool degenerate = p.z0 == Cx{} || p.unimodular_lambda();
  meta.set("point", std::string(degenerate ? "degenerate" : "interior"));
  const Cx value = degenerate ? degenerate_point(p) : interior_center(p);
  emit(point_document(meta, value), o.format.empty() ? "json" : o.format, o.out, out);
  return kOk;
}

int cmd_growth(const Options& o, std::ostream& out) {
  const ClassParams p = class_params(o);
  const Cx z = parse_complex(o.z, "--z");
  Metadata meta = base_metadata(o, p);
  meta.set("z_re", z.real()).set("z_im", z.imag());
  const GrowthBound gb =
      o.klass == "G" ? vG_membership_bound(z, f_params(o, p)) : growth_bound(z, p);
  emit(growth_document(meta, gb), o.format.empty() ? "json" : o.format, o.out, out);
  return kOk;
}

int cmd_diskbound(const Options& o, std::ostream& out) {
  const ClassParams p = class_params(o);
  if (!(std::abs(p.lambda) < 1.0) || p.unimodular_lambda())
    throw InvalidParams("diskbound requires |lambda| < 1");
  Metadata meta = base_metadata(o, p);
  meta.set("path", std::string("segment"));
  emit(disk_document(meta, enclosure_disk(p, config_from_env())),
       o.format.empty() ? "json" : o.format, o.out, out);
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& out) {
  CampaignConfig cfg;
  cfg.seed = o.seed;
  cfg.trials = o.trials;
  cfg.threads = o.threads;
  cfg.validate();
  const CampaignReport report = run_campaign(cfg);
  std::string text;
  if (o.format.empty() || o.format == "text") {
    text = report.to_text();
  } else if (o.format == "json") {
    text = report.to_json();
  } else {
    throw InvalidParams("verify --format must be text or json");
  }
  if (o.out.empty()) {
    out << text;
  } else {
    std::ofstream file(o.out, std::ios::binary);
    if (!file) throw InvalidParams("cannot open output file '" + o.out + "'");
    file << text;
  }
  return report.all_passed() ? kOk : kPropertyViolation;
}

int cmd_table1(const Options& o, std::ostream& out) {
  const std::string format = o.format.empty() ? "csv" : o.format;
  const std::filesystem::path dir = o.out.empty() ? std::filesystem::path(".") : std::filesystem::path(o.out);
  std::filesystem::create_directories(dir);
  const QuadratureConfig quad = config_from_env();
  bool ok = true;
  int row_number = 0;
  for (const Table1Row& row : kTable1) {
    ++row_number;
    const ClassParams p = ClassParams::make(row.gamma, row.beta, row.lambda, row.z0);
    const BoundaryCurve closed = boundary_curve(p, o.samples, CurveMethod::ClosedForm, quad, o.threads);
    const BoundaryCurve quadrature = boundary_curve(p, o.samples, CurveMethod::Quadrature, quad, o.threads);
    double deviation = 0.0;
    for (std::size_t k = 0; k < closed.points.size(); ++k)
      deviation = std::max(deviation, std::abs(closed.points[k] - quadrature.points[k]));

    const ClassParams pg{0.0, row.beta, row.lambda, row.z0};
    const BoundaryCurve g_curve = vG_boundary_closed_form({1.0, row.beta, row.lambda, row.z0}, o.samples);

    auto check_and_write = [&](const char* klass, const ClassParams& params, const BoundaryCurve& curve,
                               std::optional<double> dev) {
      const Polygon poly = curve.polygon();
      const bool convex = polygon_is_convex(poly, default_convexity_tol(poly));
      const bool simple = polygon_is_simple(poly, 1e-12 * poly.diameter());
      out << "row " << row_number << ' ' << klass << ": convex=" << (convex ? "yes" : "no")
          << " simple=" << (simple ? "yes" : "no");
      if (dev) out << " max_deviation=" << format_double(*dev);
      out << '\n';
      if (!convex || !simple || (dev && *dev > 1e-9)) {
        ok = false;
        return;
      }
      Metadata meta = params_metadata(klass, params);
      meta.set("method", std::string("closed")).set("table1_row", static_cast<std::int64_t>(row_number));
      if (dev) meta.set("max_deviation", *dev);
      const auto file = dir / ("table1_row" + std::to_string(row_number) + "_" + klass + "." + format);
      emit(curve_document(meta, curve), format, file.string(), out);
    };
    check_and_write("P", p, closed, deviation);
    check_and_write("G", pg, g_curve, std::nullopt);
  }
  return ok ? kOk : kPropertyViolation;
}

void add_class_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--class", o.klass, "Function class")->check(CLI::IsMember({"P", "R", "G"}));
  cmd->add_option("--gamma", o.gamma, "Tilt angle gamma, |gamma| < pi/2");
  cmd->add_option("--beta", o.beta, "Shift beta, 0 <= beta < 1");
  cmd->add_option("--alpha", o.alpha, "alpha as RE,IM (class G)");
  cmd->add_option("--lambda", o.lambda, "lambda as RE,IM");
  cmd->add_option("--z0", o.z0, "z0 as RE,IM");
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format");
  cmd->add_option("--out", o.out, "Output path");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Regions of variability for integrals of functions with positive real part"};
  app.name("varregion");
  app.require_subcommand(1);
  Options o;

  auto* boundary = app.add_subcommand("boundary", "Sample the boundary curve of the region");
  add_class_flags(boundary, o);
  add_output_flags(boundary, o);
  boundary->add_option("--samples", o.samples, "Number of theta samples (>= 16)");
  boundary->add_option("--method", o.method, "closed, quadrature or both");
  boundary->add_option("--threads", o.threads, "Worker threads (0: all cores)");

  auto* point = app.add_subcommand("point", "Degenerate point or interior center of the region");
  add_class_flags(point, o);
  add_output_flags(point, o);

  auto* growth = app.add_subcommand("growth", "Growth disk |P(z) - c| <= r at a point z");
  add_class_flags(growth, o);
  add_output_flags(growth, o);
  growth->add_option("--z", o.z, "Evaluation point as RE,IM");

  auto* diskbound = app.add_subcommand("diskbound", "Enclosure disk along the segment [0, z0]");
  add_class_flags(diskbound, o);
  add_output_flags(diskbound, o);

  auto* verify = app.add_subcommand("verify", "Run the seeded property campaign");
  verify->add_option("--seed", o.seed, "Campaign seed");
  verify->add_option("--trials", o.trials, "Trials per property (>= 1)");
  verify->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  add_output_flags(verify, o);

  auto* table1 = app.add_subcommand("table1", "Write the five reference parameter sets as curves");
  table1->add_option("--samples", o.samples, "Number of theta samples (>= 16)");
  table1->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  add_output_flags(table1, o);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }

  try {
    if (boundary->parsed()) return cmd_boundary(o, out, err);
    if (point->parsed()) return cmd_point(o, out);
    if (growth->parsed()) return cmd_growth(o, out);
    if (diskbound->parsed()) return cmd_diskbound(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (table1->parsed()) return cmd_table1(o, out);
  } catch (const NonConvergence& e) {
    err << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return kValidation;
  }
  return kValidation;
}

}  // namespace varregion::cli
