#include "varregion/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <queue>
#include <string>
#include <vector>

namespace varregion {

namespace {

// Gauss-Kronrod 7/15 abscissae and weights on [-1, 1]. Odd-indexed Kronrod
// nodes are the Gauss nodes.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Piece {
  double lo;
  double hi;
  Cx value;
  double error;
};

struct ByError {
  bool operator()(const Piece& a, const Piece& b) const {
    if (a.error != b.error) return a.error < b.error;
    return a.lo > b.lo;
  }
};

// f is evaluated on the unit parameter interval and already includes the
// Jacobian of the caller's path.
template <class F>
Piece kronrod(const F& f, double lo, double hi) {
  const double center = 0.5 * (lo + hi);
  const double half = 0.5 * (hi - lo);
  const Cx fc = f(center);
  Cx gauss = fc * kWg[3];
  Cx kron = fc * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Cx f1 = f(center - dx);
    const Cx f2 = f(center + dx);
    kron += kWgk[j] * (f1 + f2);
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  kron *= half;
  gauss *= half;
  return {lo, hi, kron, std::abs(kron - gauss)};
}

template <class F>
Cx adaptive(const F& f, const QuadratureConfig& cfg) {
  cfg.validate();
  std::priority_queue<Piece, std::vector<Piece>, ByError> heap;
  Piece first = kronrod(f, 0.0, 1.0);
  Cx total = first.value;
  double error = first.error;
  heap.push(first);
  int subdivisions = 1;
  while (!(error <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(total)))) {
    if (!std::isfinite(error)) throw NonConvergence("quadrature: integrand is not finite on the path");
    if (subdivisions >= cfg.max_subdivisions) {
      throw NonConvergence("quadrature did not converge after " + std::to_string(subdivisions) +
                           " subdivisions (error estimate " + std::to_string(error) + ")");
    }
    const Piece worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.lo + worst.hi);
    const Piece left = kronrod(f, worst.lo, mid);
    const Piece right = kronrod(f, mid, worst.hi);
    total += left.value + right.value - worst.value;
    error += left.error + right.error - worst.error;
    heap.push(left);
    heap.push(right);
    ++subdivisions;
  }
  // Re-sum in interval order so the result does not carry update drift.
  std::vector<Piece> pieces;
  pieces.reserve(heap.size());
  while (!heap.empty()) {
    pieces.push_back(heap.top());
    heap.pop();
  }
  std::sort(pieces.begin(), pieces.end(),
            [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  Cx sum = 0.0;
  for (const auto& p : pieces) sum += p.value;
  return sum;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(abs_tol >= 1e-15) || !std::isfinite(abs_tol))
    throw InvalidParams("abs_tol must be >= 1e-15");
  if (!(rel_tol > 0.0) || !std::isfinite(rel_tol)) throw InvalidParams("rel_tol must be > 0");
  if (max_subdivisions < 8) throw InvalidParams("max_subdivisions must be >= 8");
}

QuadratureConfig config_from_env() {
  QuadratureConfig cfg;
  if (const char* env = std::getenv("VARREGION_TOL")) {
    char* end = nullptr;
    const double tol = std::strtod(env, &end);
    if (end == env || *end != '\0') throw InvalidParams("VARREGION_TOL is not a number");
    cfg.abs_tol = tol;
    cfg.validate();
  }
  return cfg;
}

Cx integrate_segment(const ComplexFn& f, Cx a, Cx b, const QuadratureConfig& cfg) {
  require_finite(a, "segment start");
  require_finite(b, "segment end");
  const Cx span = b - a;
  if (span == Cx{0.0, 0.0}) {
    cfg.validate();
    return 0.0;
  }
  return adaptive([&](double t) { return f(a + t * span) * span; }, cfg);
}

Cx integrate_real(const std::function<Cx(double)>& f, double lo, double hi,
                  const QuadratureConfig& cfg) {
  if (!std::isfinite(lo) || !std::isfinite(hi)) throw InvalidParams("interval must be finite");
  const double span = hi - lo;
  if (span == 0.0) {
    cfg.validate();
    return 0.0;
  }
  return adaptive([&](double t) { return f(lo + t * span) * span; }, cfg);
}

}  // namespace varregion
