#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "varregion/bounds.hpp"
#include "varregion/regions.hpp"
#include "varregion/rng.hpp"

using namespace varregion;

namespace {

ClassParams random_class(Rng& rng) {
  return ClassParams::make(rng.uniform(-1.5, 1.5), rng.uniform(0.0, 0.98), rng.polar(0.0, 0.95),
                           rng.polar(0.05, 0.95));
}

}  // namespace

TEST(GrowthBound, SimpleValue) {
  const GrowthBound g = growth_bound(0.5, ClassParams::make(0.0, 0.0, 0.0, 0.5));
  EXPECT_NEAR(g.c.real(), 17.0 / 15.0, 1e-15);
  EXPECT_NEAR(g.c.imag(), 0.0, 1e-16);
  EXPECT_NEAR(g.r, 8.0 / 15.0, 1e-15);
  EXPECT_NEAR(g.c.real(), 1.1333333333, 1e-10);
  EXPECT_NEAR(g.r, 0.5333333333, 1e-10);
}

TEST(GrowthBound, OriginIsExact) {
  const GrowthBound g = growth_bound(0.0, ClassParams::make(0.3, 0.4, Cx(0.1, 0.5), 0.5));
  EXPECT_EQ(g.c, Cx(1.0));
  EXPECT_EQ(g.r, 0.0);
}

TEST(GrowthBound, RejectsPointsOutsideDisk) {
  EXPECT_THROW(growth_bound(1.0, ClassParams::make(0.0, 0.0, 0.0, 0.5)), InvalidParams);
}

TEST(GrowthBound, KernelsAttainTheBound) {
  Rng rng(41);
  for (int i = 0; i < 300; ++i) {
    const ClassParams p = random_class(rng);
    const Cx z = rng.polar(0.0, 0.95);
    const double theta = rng.uniform(-kPi, kPi);
    const GrowthBound g = growth_bound(z, p);
    const Cx h = oracle::kernel(z, theta, p.gamma, p.beta, p.lambda);
    EXPECT_NEAR(std::abs(h - g.c), g.r, 1e-9);
  }
}

TEST(GrowthBound, MembersSatisfyTheBound) {
  Rng rng(42);
  for (int i = 0; i < 200; ++i) {
    const ClassParams p = random_class(rng);
    const auto gen = SchwarzGenerator::blaschke(rng.polar(0.0, 1.0), rng.uniform_int(1, 3),
                                                {rng.polar(0.0, 0.9), rng.polar(0.0, 0.9)});
    const SampledMember m = sample_member(gen, p);
    const Cx z = rng.polar(0.0, 0.95);
    const GrowthBound g = growth_bound(z, p);
    EXPECT_LE(std::abs(m(z) - g.c), g.r + 1e-10);
  }
}

TEST(GrowthBound, StrictForContractiveGenerator) {
  Rng rng(43);
  const auto gen = SchwarzGenerator::monomial(0.5, 2);
  for (int i = 0; i < 100; ++i) {
    const ClassParams p = random_class(rng);
    const SampledMember m = sample_member(gen, p);
    const Cx z = rng.polar(0.05, 0.9);
    const GrowthBound g = growth_bound(z, p);
    EXPECT_LT(std::abs(m(z) - g.c), g.r);
  }
}

TEST(GrowthBoundLambda0, Examples) {
  const ClassParams p = ClassParams::make(0.0, 0.0, 0.0, 0.5);
  const GrowthBound origin = growth_bound_lambda0(0.0, p);
  EXPECT_EQ(origin.c, Cx(1.0));
  EXPECT_EQ(origin.r, 0.0);
  const GrowthBound half = growth_bound_lambda0(0.5, p);
  EXPECT_NEAR(half.c.real(), 17.0 / 15.0, 1e-15);
  EXPECT_NEAR(half.r, 8.0 / 15.0, 1e-15);
}

TEST(GrowthBoundLambda0, AgreesWithGeneralBound) {
  Rng rng(44);
  for (int i = 0; i < 100; ++i) {
    const ClassParams p = ClassParams::make(0.0, rng.uniform(0.0, 0.99), 0.0, 0.5);
    const Cx z = rng.polar(0.0, 0.95);
    const GrowthBound a = growth_bound_lambda0(z, p), b = growth_bound(z, p);
    EXPECT_LT(std::abs(a.c - b.c), 1e-12);
    EXPECT_NEAR(a.r, b.r, 1e-12);
  }
}

TEST(GrowthBoundLambda0, RequiresZeroLambdaAndGamma) {
  EXPECT_THROW(growth_bound_lambda0(0.5, ClassParams::make(0.0, 0.0, 0.1, 0.5)), InvalidParams);
  EXPECT_THROW(growth_bound_lambda0(0.5, ClassParams::make(0.2, 0.0, 0.0, 0.5)), InvalidParams);
}

TEST(MobiusTriple, SumIdentity) {
  Rng rng(45);
  for (int i = 0; i < 200; ++i) {
    const ClassParams p = random_class(rng);
    const Cx z = rng.polar(0.05, 0.95);
    if (std::abs(z - std::conj(p.lambda)) < 1e-2) continue;
    const MobiusTriple t = mobius_triple(z, p);
    const Cx expected = 2.0 * (1.0 - std::norm(p.lambda)) * (1.0 - p.beta) * std::cos(p.gamma) *
                        unit(-p.gamma) * z / ((1.0 - p.lambda * z) * (z - std::conj(p.lambda)));
    EXPECT_LT(std::abs(t.A + t.B - expected), 1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(MobiusTriple, ReproducesGrowthBound) {
  Rng rng(46);
  for (int i = 0; i < 200; ++i) {
    const ClassParams p = random_class(rng);
    const Cx z = rng.polar(0.05, 0.9);
    if (std::abs(z - std::conj(p.lambda)) < 1e-2) continue;
    const MobiusTriple t = mobius_triple(z, p);
    const GrowthBound g = growth_bound(z, p);
    const double zt2 = std::norm(z) * std::norm(t.tau);
    EXPECT_LT(std::abs((t.A + zt2 * t.B) / (1.0 - zt2) - g.c), 1e-12 * std::max(1.0, std::abs(g.c)));
    EXPECT_NEAR(std::abs(z) * std::abs(t.tau) * std::abs(t.A + t.B) / (1.0 - zt2), g.r,
                1e-12 * std::max(1.0, g.r));
    const double rhs = (1.0 - std::norm(z)) * (1.0 + std::norm(z) - 2.0 * (p.lambda * z).real()) /
                       std::norm(1.0 - p.lambda * z);
    EXPECT_NEAR(1.0 - zt2, rhs, 1e-12);
  }
}

TEST(MobiusTriple, PoleRejected) {
  const ClassParams p = ClassParams::make(0.0, 0.0, Cx(0.3, 0.4), 0.5);
  EXPECT_THROW(mobius_triple(std::conj(p.lambda), p), PoleAtInput);
}

TEST(EnclosureDisk, OriginGivesEmptyDisk) {
  const DiskBound d = enclosure_disk(ClassParams::make(0.3, 0.2, 0.4, 0.0));
  EXPECT_EQ(d.center, Cx(0.0));
  EXPECT_EQ(d.radius, 0.0);
}

TEST(EnclosureDisk, SegmentValues) {
  const DiskBound d = enclosure_disk(ClassParams::make(0.0, 0.0, 0.0, 0.5));
  EXPECT_NEAR(d.radius, std::atanh(0.5) - std::atan(0.5), 1e-13);
  EXPECT_NEAR(d.radius, 0.0856585353, 1e-10);
  EXPECT_NEAR(d.center.real(), std::atanh(0.5) + std::atan(0.5) - 0.5, 1e-13);
  EXPECT_NEAR(d.center.imag(), 0.0, 1e-15);
}

TEST(EnclosureDisk, ContainsTableRowBoundaries) {
  for (const auto& row : oracle::kTable1) {
    const ClassParams p = ClassParams::make(row.gamma, row.beta, row.lambda, row.z0);
    const DiskBound d = enclosure_disk(p);
    for (Cx w : boundary_curve(p, 720, CurveMethod::ClosedForm).points)
      EXPECT_LE(std::abs(w - d.center), d.radius + 1e-9);
  }
}

TEST(EnclosureDisk, CurvedPathAlsoEncloses) {
  const ClassParams p = ClassParams::make(0.3, 0.2, Cx(0.2, -0.3), Cx(0.5, 0.4));
  const Cx bend(-0.15, 0.2);
  const Path arc{[&](double t) { return t * p.z0 + t * (1.0 - t) * bend; },
                 [&](double t) { return p.z0 + (1.0 - 2.0 * t) * bend; }};
  const DiskBound curved = enclosure_disk(p, arc);
  const DiskBound straight = enclosure_disk(p);
  EXPECT_GT(curved.radius, 0.0);
  EXPECT_GT(std::abs(curved.center - straight.center), 1e-6);
  for (Cx w : boundary_curve(p, 360, CurveMethod::ClosedForm).points)
    EXPECT_LE(std::abs(w - curved.center), curved.radius + 1e-9);
}

TEST(LemmaG, Values) {
  EXPECT_EQ(lemma_G(0.0, 0.3, 0.2), Cx(0.0));
  const Cx g = lemma_G(0.5, 0.0, 0.0);
  const double expected = 0.5 / (2.0 * 0.75) - 0.25 * std::log(3.0);
  EXPECT_NEAR(g.real(), expected, 1e-14);
  EXPECT_NEAR(g.real(), 0.0586802612, 1e-10);
}

TEST(LemmaG, LeadingTermWithoutLambda) {
  Rng rng(47);
  for (int i = 0; i < 20; ++i) {
    const double theta = rng.uniform(-kPi, kPi);
    const Cx z = std::polar(1e-3, rng.uniform(-kPi, kPi));
    const Cx ratio = 3.0 * unit(-theta) * lemma_G(z, theta, 0.0) / (z * z * z);
    EXPECT_LT(std::abs(ratio - 1.0), 1e-4);
  }
}

TEST(LemmaG, FirstCorrectionTerm) {
  Rng rng(48);
  for (int i = 0; i < 20; ++i) {
    const double theta = rng.uniform(-kPi, kPi);
    const Cx lam = rng.polar(0.0, 0.9);
    const Cx z = std::polar(1e-3, rng.uniform(-kPi, kPi));
    const Cx ratio = 3.0 * unit(-theta) * lemma_G(z, theta, lam) / (z * z * z);
    const Cx linear = -1.5 * (std::conj(lam) * unit(theta) - lam) * z;
    EXPECT_LT(std::abs(ratio - 1.0 - linear), 2e-5);
  }
}

TEST(LemmaG0, StarlikeOnRadialGrid) {
  std::vector<Cx> grid;
  for (int k = 1; k <= 9; ++k)
    for (int j = 0; j < 8; ++j) grid.push_back(std::polar(0.1 * k, 2.0 * kPi * j / 8));
  EXPECT_GT(lemma_G0_starlike_check(0.0, 0.0, grid), 0.0);
}

TEST(LemmaG0, StarlikeOnSixtyFourPointGrid) {
  std::vector<Cx> grid;
  for (int k = 0; k < 64; ++k) grid.push_back(std::polar(0.1 + 0.8 * (k % 8) / 7.0, 2.0 * kPi * (k / 8) / 8 + 0.1));
  EXPECT_GT(lemma_G0_starlike_check(kPi / 3, 0.5, grid), 0.0);
}

TEST(LemmaG0, NormalizedNearOrigin) {
  const Cx z = std::polar(2e-3, 0.7);
  EXPECT_LT(std::abs(lemma_G0(z, 1.2, Cx(0.3, 0.1)) / z - 1.0), 1e-2);
  const Cx tiny = std::polar(2e-3, -2.0);
  EXPECT_LT(std::abs(lemma_G0(tiny, 0.0, 0.0) / tiny - 1.0), 1e-5);
}

TEST(LemmaG0, BranchAmbiguityNearOrigin) {
  const std::vector<Cx> grid{Cx(5e-4, 0.0)};
  EXPECT_THROW(lemma_G0_starlike_check(0.0, 0.0, grid), BranchAmbiguity);
  EXPECT_THROW(lemma_G0(Cx(0.0, 1e-4), 0.0, 0.0), BranchAmbiguity);
}
