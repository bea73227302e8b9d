#pragma once

#include <span>
#include <vector>

#include "varregion/types.hpp"

namespace varregion {

/// Closed polygon; the last vertex connects back to the first.
class Polygon {
 public:
  /// Throws InvalidParams on fewer than three vertices, non-finite vertices,
  /// or consecutive vertices closer than 1e-14 (including last/first).
  explicit Polygon(std::vector<Cx> vertices);

  std::span<const Cx> vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  const Cx& operator[](std::size_t i) const { return vertices_[i]; }

  /// Largest distance between any two vertices.
  double diameter() const;
  /// Largest distance between adjacent vertices.
  double max_edge() const;
  /// Twice the signed area is positive for counterclockwise order.
  double signed_area() const;

 private:
  std::vector<Cx> vertices_;
};

/// True when every vertex lies within tol of the first one. Such a vertex set
/// describes a point region rather than a polygon.
bool is_point_cloud(std::span<const Cx> vertices, double tol = 1e-12);

/// Default tolerance for polygon_is_convex: 1e-10 times the diameter.
double default_convexity_tol(const Polygon& p);

/// True iff all turns have the same orientation, treating |cross| <= tol as
/// collinear, and the boundary winds exactly once.
bool polygon_is_convex(const Polygon& p, double tol);

/// True iff no two non-adjacent edges come within tol of each other.
bool polygon_is_simple(const Polygon& p, double tol);

/// Signed distance from w to the boundary: positive inside, negative outside.
/// Independent of vertex orientation.
double point_in_polygon(const Polygon& p, Cx w);

/// Distance from w to the closed segment [a, b].
double segment_distance(Cx w, Cx a, Cx b);

/// Convex hull, counterclockwise, collinear points dropped.
std::vector<Cx> convex_hull(std::vector<Cx> points);

}  // namespace varregion
