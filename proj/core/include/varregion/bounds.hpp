#pragma once

#include <functional>
#include <span>

#include "varregion/kernels.hpp"
#include "varregion/quadrature.hpp"

namespace varregion {

/// Disk |P(z) - c| <= r containing the values of every member at z.
struct GrowthBound {
  Cx c;
  double r;
};

/// The Mobius data A, B, tau from which c and r are assembled.
struct MobiusTriple {
  Cx A;
  Cx B;
  Cx tau;
};

struct DiskBound {
  Cx center;
  double radius;
};

/// C^1 path t -> z(t), t in [0, 1], starting at 0.
struct Path {
  std::function<Cx(double)> point;
  std::function<Cx(double)> velocity;

  /// Straight segment from 0 to end.
  static Path segment(Cx end);
};

/// Requires |z| < 1 and |lambda| <= 1. Radius is zero at z = 0 and when
/// |lambda| = 1.
GrowthBound growth_bound(Cx z, const ClassParams& p);

/// The lambda = 0, gamma = 0 specialization in terms of |z|^4. Throws
/// InvalidParams for any other slice.
GrowthBound growth_bound_lambda0(Cx z, const ClassParams& p);

/// Throws PoleAtInput when z = conj(lambda) or lambda z = 1.
MobiusTriple mobius_triple(Cx z, const ClassParams& p);

/// Disk (C, R) containing the whole region, from integrating c and r along
/// a path from 0 to z0.
DiskBound enclosure_disk(const ClassParams& p, const Path& path, const QuadratureConfig& cfg = {});

/// Same, along the straight segment [0, z0].
DiskBound enclosure_disk(const ClassParams& p, const QuadratureConfig& cfg = {});

/// G(z) = integral over [0, z] of
///   e^{i theta} s^2 / (1 + (conj(lambda) e^{i theta} - lambda) s - e^{i theta} s^2)^2 ds.
Cx lemma_G(Cx z, double theta, Cx lambda, const QuadratureConfig& cfg = {});

/// G0 with G = (1/3) e^{i theta} G0^3 and G0(z) ~ z near 0. The cube-root
/// branch is continued along the ray from 0 to z. Throws BranchAmbiguity for
/// |z| < 1e-3.
Cx lemma_G0(Cx z, double theta, Cx lambda, const QuadratureConfig& cfg = {});

/// min over grid of Re(z G0'(z) / G0(z)); positive certifies starlikeness of
/// G0 on the grid. G0' uses central differences with step 1e-5 |z|.
double lemma_G0_starlike_check(double theta, Cx lambda, std::span<const Cx> grid,
                               const QuadratureConfig& cfg = {});

}  // namespace varregion
