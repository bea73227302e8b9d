#include "varregion/io.hpp"

#include <algorithm>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

namespace varregion {

namespace {

const char* kind_name(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::Curve: return "curve";
    case DocumentKind::Point: return "point";
    case DocumentKind::Growth: return "growth";
    case DocumentKind::Disk: return "disk";
  }
  return "curve";
}

DocumentKind kind_from_name(const std::string& name) {
  if (name == "curve") return DocumentKind::Curve;
  if (name == "point") return DocumentKind::Point;
  if (name == "growth") return DocumentKind::Growth;
  if (name == "disk") return DocumentKind::Disk;
  throw InvalidParams("unknown document kind '" + name + "'");
}

// Doubles always carry a '.' or exponent so they read back as doubles.
std::string json_number(double x) {
  std::string s = format_double(x);
  if (s.find_first_of(".eEni") == std::string::npos) s += ".0";
  return s;
}

std::string meta_value_json(const MetaValue& v) {
  if (const auto* s = std::get_if<std::string>(&v)) return json_quote(*s);
  if (const auto* d = std::get_if<double>(&v)) return json_number(*d);
  return std::to_string(std::get<std::int64_t>(v));
}

void write_complex_json(std::ostream& out, Cx z) {
  out << "{\"re\": " << json_number(z.real()) << ", \"im\": " << json_number(z.imag()) << "}";
}

void write_samples_json(std::ostream& out, const char* key, const std::vector<Sample>& samples) {
  out << ",\n  \"" << key << "\": [";
  for (std::size_t i = 0; i < samples.size(); ++i) {
    out << (i == 0 ? "\n" : ",\n") << "    {\"theta\": " << json_number(samples[i].theta)
        << ", \"re\": " << json_number(samples[i].value.real())
        << ", \"im\": " << json_number(samples[i].value.imag()) << "}";
  }
  out << (samples.empty() ? "]" : "\n  ]");
}

std::vector<Sample> samples_from_json(const nlohmann::json& arr) {
  std::vector<Sample> out;
  out.reserve(arr.size());
  for (const auto& s : arr)
    out.push_back({s.at("theta").get<double>(), {s.at("re").get<double>(), s.at("im").get<double>()}});
  return out;
}

Cx complex_from_json(const nlohmann::json& j) { return {j.at("re").get<double>(), j.at("im").get<double>()}; }

double parse_double(const std::string& field) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(field, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != field.size()) throw InvalidParams("malformed number '" + field + "'");
  return v;
}

std::vector<std::string> split_commas(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) fields.push_back(field);
  return fields;
}

}  // namespace

Metadata& Metadata::set(std::string key, MetaValue value) {
  for (auto& [k, v] : entries_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  entries_.emplace_back(std::move(key), std::move(value));
  return *this;
}

const MetaValue* Metadata::find(const std::string& key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return &v;
  return nullptr;
}

Metadata params_metadata(const std::string& klass, const ClassParams& p) {
  Metadata m;
  m.set("tool_version", std::string(kToolVersion))
      .set("class", klass)
      .set("gamma", p.gamma)
      .set("beta", p.beta)
      .set("lambda_re", p.lambda.real())
      .set("lambda_im", p.lambda.imag())
      .set("z0_re", p.z0.real())
      .set("z0_im", p.z0.imag());
  return m;
}

OutputDocument curve_document(const Metadata& meta, const BoundaryCurve& curve) {
  if (curve.is_point()) return point_document(meta, curve.points.front());
  OutputDocument doc;
  doc.kind = DocumentKind::Curve;
  doc.meta = meta;
  doc.meta.set("samples", static_cast<std::int64_t>(curve.points.size()));
  for (std::size_t k = 0; k < curve.points.size(); ++k)
    doc.samples.push_back({curve.thetas[k], curve.points[k]});
  return doc;
}

OutputDocument point_document(const Metadata& meta, Cx point) {
  OutputDocument doc;
  doc.kind = DocumentKind::Point;
  doc.meta = meta;
  doc.point = point;
  return doc;
}

OutputDocument growth_document(const Metadata& meta, const GrowthBound& bound) {
  OutputDocument doc;
  doc.kind = DocumentKind::Growth;
  doc.meta = meta;
  doc.point = bound.c;
  doc.radius = bound.r;
  return doc;
}

OutputDocument disk_document(const Metadata& meta, const DiskBound& disk) {
  OutputDocument doc;
  doc.kind = DocumentKind::Disk;
  doc.meta = meta;
  doc.point = disk.center;
  doc.radius = disk.radius;
  return doc;
}

std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string json_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  return out + "\"";
}

void write_csv(const OutputDocument& doc, std::ostream& out) {
  switch (doc.kind) {
    case DocumentKind::Curve: {
      const bool both = !doc.secondary.empty();
      out << (both ? "theta,re,im,re_quadrature,im_quadrature\n" : "theta,re,im\n");
      for (std::size_t i = 0; i < doc.samples.size(); ++i) {
        const Sample& s = doc.samples[i];
        out << format_double(s.theta) << ',' << format_double(s.value.real()) << ','
            << format_double(s.value.imag());
        if (both)
          out << ',' << format_double(doc.secondary[i].value.real()) << ','
              << format_double(doc.secondary[i].value.imag());
        out << '\n';
      }
      break;
    }
    case DocumentKind::Point:
      out << "re,im\n" << format_double(doc.point.real()) << ',' << format_double(doc.point.imag()) << '\n';
      break;
    case DocumentKind::Growth:
    case DocumentKind::Disk:
      out << "center_re,center_im,radius\n"
          << format_double(doc.point.real()) << ',' << format_double(doc.point.imag()) << ','
          << format_double(doc.radius) << '\n';
      break;
  }
}

void write_json(const OutputDocument& doc, std::ostream& out) {
  out << "{\n  \"meta\": {\"kind\": " << json_quote(kind_name(doc.kind));
  for (const auto& [key, value] : doc.meta.entries())
    out << ", " << json_quote(key) << ": " << meta_value_json(value);
  out << "}";
  switch (doc.kind) {
    case DocumentKind::Curve:
      write_samples_json(out, "samples", doc.samples);
      if (!doc.secondary.empty()) write_samples_json(out, "samples_quadrature", doc.secondary);
      break;
    case DocumentKind::Point:
      out << ",\n  \"point\": ";
      write_complex_json(out, doc.point);
      break;
    case DocumentKind::Growth:
    case DocumentKind::Disk:
      out << ",\n  \"center\": ";
      write_complex_json(out, doc.point);
      out << ",\n  \"radius\": " << json_number(doc.radius);
      break;
  }
  out << "\n}\n";
}

void write_svg(const OutputDocument& doc, std::ostream& out) {
  if (doc.kind != DocumentKind::Curve || doc.samples.empty())
    throw InvalidParams("SVG output needs a curve document");
  // SVG y grows downward; plot (re, -im).
  double xmin = doc.samples.front().value.real(), xmax = xmin;
  double ymin = -doc.samples.front().value.imag(), ymax = ymin;
  auto extend = [&](const std::vector<Sample>& samples) {
    for (const Sample& s : samples) {
      xmin = std::min(xmin, s.value.real());
      xmax = std::max(xmax, s.value.real());
      ymin = std::min(ymin, -s.value.imag());
      ymax = std::max(ymax, -s.value.imag());
    }
  };
  extend(doc.samples);
  extend(doc.secondary);
  const double w0 = std::max(xmax - xmin, 1e-12);
  const double h0 = std::max(ymax - ymin, 1e-12);
  const double vx = xmin - 0.05 * w0, vy = ymin - 0.05 * h0;
  const double vw = 1.1 * w0, vh = 1.1 * h0;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" viewBox=\"" << format_double(vx) << ' '
      << format_double(vy) << ' ' << format_double(vw) << ' ' << format_double(vh)
      << "\" width=\"800\" height=\"" << static_cast<long>(800.0 * vh / vw + 0.5) << "\">\n";
  out << "  <line x1=\"" << format_double(vx) << "\" y1=\"0\" x2=\"" << format_double(vx + vw)
      << "\" y2=\"0\" stroke=\"#999\" stroke-width=\"0.5\" vector-effect=\"non-scaling-stroke\"/>\n";
  out << "  <line x1=\"0\" y1=\"" << format_double(vy) << "\" x2=\"0\" y2=\"" << format_double(vy + vh)
      << "\" stroke=\"#999\" stroke-width=\"0.5\" vector-effect=\"non-scaling-stroke\"/>\n";
  auto polyline = [&](const std::vector<Sample>& samples, const char* color) {
    out << "  <polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-width=\"1.5\" vector-effect=\"non-scaling-stroke\" points=\"";
    for (std::size_t i = 0; i <= samples.size(); ++i) {
      const Cx v = samples[i % samples.size()].value;
      out << (i == 0 ? "" : " ") << format_double(v.real()) << ',' << format_double(-v.imag());
    }
    out << "\"/>\n";
  };
  polyline(doc.samples, "#1f4e9c");
  if (!doc.secondary.empty()) polyline(doc.secondary, "#c0392b");
  out << "</svg>\n";
}

std::string to_csv(const OutputDocument& doc) {
  std::ostringstream ss;
  write_csv(doc, ss);
  return ss.str();
}

std::string to_json(const OutputDocument& doc) {
  std::ostringstream ss;
  write_json(doc, ss);
  return ss.str();
}

std::string to_svg(const OutputDocument& doc) {
  std::ostringstream ss;
  write_svg(doc, ss);
  return ss.str();
}

OutputDocument read_curve_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw InvalidParams("empty CSV");
  const bool both = line == "theta,re,im,re_quadrature,im_quadrature";
  if (!both && line != "theta,re,im") throw InvalidParams("unexpected CSV header '" + line + "'");
  OutputDocument doc;
  doc.kind = DocumentKind::Curve;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_commas(line);
    if (f.size() != (both ? 5u : 3u)) throw InvalidParams("malformed CSV row '" + line + "'");
    const double theta = parse_double(f[0]);
    doc.samples.push_back({theta, {parse_double(f[1]), parse_double(f[2])}});
    if (both) doc.secondary.push_back({theta, {parse_double(f[3]), parse_double(f[4])}});
  }
  return doc;
}

OutputDocument read_json(std::istream& in) {
  nlohmann::ordered_json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParams(std::string("malformed JSON document: ") + e.what());
  }
  OutputDocument doc;
  for (const auto& [key, value] : j.at("meta").items()) {
    if (key == "kind") {
      doc.kind = kind_from_name(value.get<std::string>());
    } else if (value.is_string()) {
      doc.meta.set(key, value.get<std::string>());
    } else if (value.is_number_integer()) {
      doc.meta.set(key, value.get<std::int64_t>());
    } else {
      doc.meta.set(key, value.get<double>());
    }
  }
  switch (doc.kind) {
    case DocumentKind::Curve:
      doc.samples = samples_from_json(j.at("samples"));
      if (j.contains("samples_quadrature")) doc.secondary = samples_from_json(j.at("samples_quadrature"));
      break;
    case DocumentKind::Point:
      doc.point = complex_from_json(j.at("point"));
      break;
    case DocumentKind::Growth:
    case DocumentKind::Disk:
      doc.point = complex_from_json(j.at("center"));
      doc.radius = j.at("radius").get<double>();
      break;
  }
  return doc;
}

}  // namespace varregion
