#include "varregion/geometry.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace varregion {

namespace {

double cross(Cx a, Cx b) { return a.real() * b.imag() - a.imag() * b.real(); }

double orient(Cx a, Cx b, Cx c) { return cross(b - a, c - a); }

struct Edge {
  Cx a;
  Cx b;
  std::size_t index;
  double xmin() const { return std::min(a.real(), b.real()); }
  double xmax() const { return std::max(a.real(), b.real()); }
};

bool segments_touch(const Edge& e, const Edge& f, double tol) {
  const double d1 = orient(e.a, e.b, f.a);
  const double d2 = orient(e.a, e.b, f.b);
  const double d3 = orient(f.a, f.b, e.a);
  const double d4 = orient(f.a, f.b, e.b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0)))
    return true;
  // Near contact: an endpoint of one edge within tol of the other edge.
  return segment_distance(f.a, e.a, e.b) <= tol || segment_distance(f.b, e.a, e.b) <= tol ||
         segment_distance(e.a, f.a, f.b) <= tol || segment_distance(e.b, f.a, f.b) <= tol;
}

}  // namespace

Polygon::Polygon(std::vector<Cx> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.size() < 3) throw InvalidParams("polygon needs at least 3 vertices");
  for (std::size_t i = 0; i < vertices_.size(); ++i) {
    require_finite(vertices_[i], "polygon vertex");
    const Cx next = vertices_[(i + 1) % vertices_.size()];
    if (std::abs(next - vertices_[i]) <= 1e-14)
      throw InvalidParams("polygon has repeated consecutive vertex at index " + std::to_string(i));
  }
}

double Polygon::diameter() const {
  // rotating calipers over the hull
  const std::vector<Cx> h = convex_hull(vertices_);
  const std::size_t m = h.size();
  if (m < 3) return m == 2 ? std::abs(h[1] - h[0]) : 0.0;
  double d = 0.0;
  std::size_t j = 1;
  for (std::size_t i = 0; i < m; ++i) {
    const Cx a = h[i], b = h[(i + 1) % m];
    while (std::abs(orient(a, b, h[(j + 1) % m])) > std::abs(orient(a, b, h[j]))) j = (j + 1) % m;
    d = std::max({d, std::abs(h[j] - a), std::abs(h[j] - b)});
  }
  return d;
}

double Polygon::max_edge() const {
  double d = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    d = std::max(d, std::abs(vertices_[(i + 1) % vertices_.size()] - vertices_[i]));
  return d;
}

double Polygon::signed_area() const {
  double s = 0.0;
  for (std::size_t i = 0; i < vertices_.size(); ++i)
    s += cross(vertices_[i], vertices_[(i + 1) % vertices_.size()]);
  return 0.5 * s;
}

bool is_point_cloud(std::span<const Cx> vertices, double tol) {
  if (vertices.empty()) return false;
  return std::all_of(vertices.begin(), vertices.end(),
                     [&](Cx v) { return std::abs(v - vertices.front()) <= tol; });
}

double default_convexity_tol(const Polygon& p) { return 1e-10 * p.diameter(); }

bool polygon_is_convex(const Polygon& p, double tol) {
  const std::size_t n = p.size();
  int sign = 0;
  double turning = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Cx e1 = p[(i + 1) % n] - p[i];
    const Cx e2 = p[(i + 2) % n] - p[(i + 1) % n];
    const double c = cross(e1, e2);
    turning += std::arg(e2 / e1);
    if (std::abs(c) <= tol) continue;
    const int s = c > 0 ? 1 : -1;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  // A star-shaped multi-loop polygon has consistent turns but winds twice.
  return std::abs(std::abs(turning) - 2.0 * kPi) < 1e-6;
}

bool polygon_is_simple(const Polygon& p, double tol) {
  const std::size_t n = p.size();
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t i = 0; i < n; ++i) edges.push_back({p[i], p[(i + 1) % n], i});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return a.xmin() < b.xmin(); });
  for (std::size_t i = 0; i < n; ++i) {
    const Edge& e = edges[i];
    for (std::size_t j = i + 1; j < n && edges[j].xmin() <= e.xmax() + tol; ++j) {
      const Edge& f = edges[j];
      const std::size_t gap = (e.index + n - f.index) % n;
      if (gap == 1 || gap == n - 1) continue;
      const double ylo = std::max(std::min(e.a.imag(), e.b.imag()), std::min(f.a.imag(), f.b.imag()));
      const double yhi = std::min(std::max(e.a.imag(), e.b.imag()), std::max(f.a.imag(), f.b.imag()));
      if (ylo > yhi + tol) continue;
      if (segments_touch(e, f, tol)) return false;
    }
  }
  return true;
}

double segment_distance(Cx w, Cx a, Cx b) {
  const Cx ab = b - a;
  const double len2 = std::norm(ab);
  if (len2 == 0.0) return std::abs(w - a);
  const double t = std::clamp(((w - a) * std::conj(ab)).real() / len2, 0.0, 1.0);
  return std::abs(w - (a + t * ab));
}

double point_in_polygon(const Polygon& p, Cx w) {
  const std::size_t n = p.size();
  double dist = std::numeric_limits<double>::infinity();
  int winding = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Cx a = p[i];
    const Cx b = p[(i + 1) % n];
    dist = std::min(dist, segment_distance(w, a, b));
    if (a.imag() <= w.imag()) {
      if (b.imag() > w.imag() && orient(a, b, w) > 0) ++winding;
    } else if (b.imag() <= w.imag() && orient(a, b, w) < 0) {
      --winding;
    }
  }
  return winding != 0 ? dist : -dist;
}

std::vector<Cx> convex_hull(std::vector<Cx> points) {
  auto less = [](Cx a, Cx b) {
    return a.real() < b.real() || (a.real() == b.real() && a.imag() < b.imag());
  };
  std::sort(points.begin(), points.end(), less);
  points.erase(std::unique(points.begin(), points.end()), points.end());
  if (points.size() < 3) return points;
  std::vector<Cx> hull(2 * points.size());
  std::size_t k = 0;
  for (const Cx& pt : points) {
    while (k >= 2 && orient(hull[k - 2], hull[k - 1], pt) <= 0) --k;
    hull[k++] = pt;
  }
  for (std::size_t i = points.size() - 1, lower = k + 1; i-- > 0;) {
    while (k >= lower && orient(hull[k - 2], hull[k - 1], points[i]) <= 0) --k;
    hull[k++] = points[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace varregion
