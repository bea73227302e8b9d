#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "varregion/bounds.hpp"
#include "varregion/regions.hpp"

namespace varregion {

inline constexpr const char* kToolVersion = "1.0.0";

using MetaValue = std::variant<std::string, double, std::int64_t>;

/// Ordered key/value metadata; keys keep insertion order on output.
class Metadata {
 public:
  Metadata& set(std::string key, MetaValue value);
  const MetaValue* find(const std::string& key) const;
  const std::vector<std::pair<std::string, MetaValue>>& entries() const { return entries_; }

  bool operator==(const Metadata&) const = default;

 private:
  std::vector<std::pair<std::string, MetaValue>> entries_;
};

/// Standard metadata block for a problem instance.
Metadata params_metadata(const std::string& klass, const ClassParams& p);

struct Sample {
  double theta;
  Cx value;
  bool operator==(const Sample&) const = default;
};

enum class DocumentKind { Curve, Point, Growth, Disk };

/// What every CLI command writes: metadata plus one payload.
struct OutputDocument {
  DocumentKind kind = DocumentKind::Curve;
  Metadata meta;
  std::vector<Sample> samples;
  /// Second route for --method both, aligned with samples.
  std::vector<Sample> secondary;
  Cx point{};
  double radius = 0.0;
};

OutputDocument curve_document(const Metadata& meta, const BoundaryCurve& curve);
OutputDocument point_document(const Metadata& meta, Cx point);
OutputDocument growth_document(const Metadata& meta, const GrowthBound& bound);
OutputDocument disk_document(const Metadata& meta, const DiskBound& disk);

/// %.17g, round-trip exact for finite doubles.
std::string format_double(double x);
/// JSON string literal with escaping.
std::string json_quote(const std::string& s);

void write_csv(const OutputDocument& doc, std::ostream& out);
void write_json(const OutputDocument& doc, std::ostream& out);
/// Curves only; the output is a pure function of the samples.
void write_svg(const OutputDocument& doc, std::ostream& out);

std::string to_csv(const OutputDocument& doc);
std::string to_json(const OutputDocument& doc);
std::string to_svg(const OutputDocument& doc);

/// Reads a curve CSV (theta,re,im[,re_quadrature,im_quadrature]). Metadata
/// is not part of the CSV schema and comes back empty.
OutputDocument read_curve_csv(std::istream& in);
/// Reads any document written by write_json.
OutputDocument read_json(std::istream& in);

}  // namespace varregion
