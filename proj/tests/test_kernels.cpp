#include <gtest/gtest.h>

#include <cmath>

#include "oracles.hpp"
#include "varregion/kernels.hpp"
#include "varregion/rng.hpp"

using namespace varregion;

namespace {

ClassParams random_class(Rng& rng, double lambda_max = 0.95) {
  return ClassParams::make(rng.uniform(-1.5, 1.5), rng.uniform(0.0, 0.95), rng.polar(0.0, lambda_max),
                           rng.polar(0.05, 0.95));
}

double half_plane_margin(Cx value, const ClassParams& p) {
  return (unit(p.gamma) * value).real() - p.beta * std::cos(p.gamma);
}

}  // namespace

TEST(ClassParams, Validation) {
  EXPECT_NO_THROW(ClassParams::make(0.0, 0.0, 0.0, 0.5));
  EXPECT_NO_THROW(ClassParams::make(1.5, 0.99, Cx(0.6, 0.8), Cx(0.0, -0.9)));
  EXPECT_THROW(ClassParams::make(kPi / 2, 0.0, 0.0, 0.5), InvalidParams);
  EXPECT_THROW(ClassParams::make(0.0, 1.0, 0.0, 0.5), InvalidParams);
  EXPECT_THROW(ClassParams::make(0.0, -0.1, 0.0, 0.5), InvalidParams);
  EXPECT_THROW(ClassParams::make(0.0, 0.0, 1.01, 0.5), InvalidParams);
  EXPECT_THROW(ClassParams::make(0.0, 0.0, 0.0, 1.0), InvalidParams);
  EXPECT_THROW(ClassParams::make(std::nan(""), 0.0, 0.0, 0.5), InvalidParams);
}

TEST(ClassParams, UnimodularLambda) {
  EXPECT_TRUE(ClassParams::make(0.0, 0.0, unit(0.7), 0.5).unimodular_lambda());
  EXPECT_FALSE(ClassParams::make(0.0, 0.0, 0.99, 0.5).unimodular_lambda());
}

TEST(ExtremalIndex, NormalizesTheta) {
  EXPECT_DOUBLE_EQ(ExtremalIndex::from_theta(-kPi).theta(), kPi);
  EXPECT_NEAR(ExtremalIndex::from_theta(3 * kPi / 2).theta(), -kPi / 2, 1e-15);
  EXPECT_NEAR(std::abs(ExtremalIndex::from_theta(1.0).a() - unit(1.0)), 0.0, 1e-16);
  EXPECT_THROW(ExtremalIndex::interior(Cx(0.9, 0.9)), InvalidParams);
}

TEST(MobiusDelta, Examples) {
  const Cx lam(0.3, 0.4);
  EXPECT_EQ(mobius_delta(0.0, lam), lam);
  EXPECT_EQ(mobius_delta(Cx(0.25, -0.1), 0.0), Cx(0.25, -0.1));
  EXPECT_NEAR(std::abs(mobius_delta(0.5, 0.5) - 0.8), 0.0, 1e-16);
}

TEST(MobiusDelta, PoleRejected) { EXPECT_THROW(mobius_delta(-1.0, 1.0), PoleAtInput); }

TEST(MobiusDelta, InverseWithNegatedLambda) {
  Rng rng(5);
  for (int i = 0; i < 200; ++i) {
    const Cx z = rng.polar(0.0, 1.0), lam = rng.polar(0.0, 0.95);
    EXPECT_LT(std::abs(mobius_delta(mobius_delta(z, lam), -lam) - z), 1e-14);
  }
}

TEST(MobiusDelta, PreservesDisk) {
  Rng rng(6);
  for (int i = 0; i < 200; ++i) {
    EXPECT_LE(std::abs(mobius_delta(rng.polar(0.0, 1.0), rng.polar(0.0, 1.0))), 1.0 + 1e-15);
  }
}

TEST(ExtremalH, NormalizedAtOrigin) {
  Rng rng(8);
  for (int i = 0; i < 50; ++i) {
    const ClassParams p = random_class(rng);
    EXPECT_EQ(extremal_H(0.0, ExtremalIndex::interior(rng.polar(0.0, 1.0)), p), Cx(1.0));
  }
}

TEST(ExtremalH, SimpleValue) {
  const ClassParams p = ClassParams::make(0.0, 0.0, 0.0, 0.5);
  const Cx h = extremal_H(0.5, ExtremalIndex::from_theta(0.0), p);
  EXPECT_NEAR(h.real(), 5.0 / 3.0, 1e-15);
  EXPECT_EQ(h.imag(), 0.0);
}

TEST(ExtremalH, MatchesDirectTranscription) {
  Rng rng(9);
  for (int i = 0; i < 200; ++i) {
    const ClassParams p = random_class(rng);
    const double theta = rng.uniform(-kPi, kPi);
    const Cx z = rng.polar(0.0, 0.95);
    const Cx expected = oracle::kernel(z, theta, p.gamma, p.beta, p.lambda);
    EXPECT_LT(std::abs(extremal_H(z, ExtremalIndex::from_theta(theta), p) - expected),
              1e-12 * std::max(1.0, std::abs(expected)));
  }
}

TEST(ExtremalH, UnimodularLambdaCollapse) {
  const Cx lam = unit(0.9);
  const ClassParams p = ClassParams::make(0.0, 0.0, lam, 0.5);
  for (double r : {0.1, 0.3, 0.5}) {
    for (double phi : {0.0, 1.0, -2.5}) {
      const Cx z = std::polar(r, phi);
      const Cx expected = (1.0 + lam * z) / (1.0 - lam * z);
      const Cx h1 = extremal_H(z, ExtremalIndex::from_theta(0.4), p);
      const Cx h2 = extremal_H(z, ExtremalIndex::interior(Cx(-0.2, 0.6)), p);
      EXPECT_LT(std::abs(h1 - h2), 1e-14);
      EXPECT_LT(std::abs(h1 - expected), 1e-14);
    }
  }
}

TEST(ExtremalH, HalfPlane) {
  Rng rng(10);
  for (int i = 0; i < 500; ++i) {
    const ClassParams p = random_class(rng);
    const Cx z = rng.polar(0.0, 0.99);
    const auto idx = ExtremalIndex::interior(rng.polar(0.0, 1.0));
    EXPECT_GT(half_plane_margin(extremal_H(z, idx, p), p), 0.0);
  }
}

TEST(ExtremalH, FirstDerivativeNormalization) {
  Rng rng(12);
  for (int i = 0; i < 20; ++i) {
    const ClassParams p = random_class(rng, 0.9);
    const auto idx = ExtremalIndex::from_theta(rng.uniform(-kPi, kPi));
    const Cx d = fd_first([&](Cx z) { return extremal_H(z, idx, p); }, 0.0);
    EXPECT_LT(std::abs(d - p.tilt() * p.lambda), 1e-7);
  }
}

TEST(POmega, Examples) {
  const ClassParams p = ClassParams::make(0.0, 0.0, 0.0, 0.5);
  EXPECT_EQ(P_from_omega(0.3, 0.0, p), Cx(1.0));
  EXPECT_NEAR(P_from_omega(0.3, 0.5, p).real(), 3.0, 1e-15);
}

TEST(POmega, ReproducesKernel) {
  Rng rng(13);
  for (int i = 0; i < 200; ++i) {
    const ClassParams p = random_class(rng);
    const Cx z = rng.polar(0.0, 0.9), a = rng.polar(0.0, 1.0);
    const Cx h = extremal_H(z, ExtremalIndex::interior(a), p);
    EXPECT_LT(std::abs(P_from_omega(z, z * mobius_delta(a * z, p.lambda), p) - h), 1e-14 * std::abs(h) + 1e-14);
  }
}

TEST(SchwarzGenerator, Construction) {
  EXPECT_THROW(SchwarzGenerator::monomial(1.1, 1), InvalidParams);
  EXPECT_THROW(SchwarzGenerator::monomial(0.5, 0), InvalidParams);
  EXPECT_THROW(SchwarzGenerator::blaschke(0.5, 1, {Cx(1.0, 0.0)}), InvalidParams);
  const auto g = SchwarzGenerator::blaschke(Cx(0.0, 0.8), 1, {Cx(0.3, 0.2), Cx(-0.5, 0.1)});
  EXPECT_EQ(g(0.0), Cx(0.0));
  Rng rng(14);
  for (int i = 0; i < 100; ++i) {
    const Cx z = rng.polar(0.0, 0.999);
    EXPECT_LE(std::abs(g(z)), std::abs(z));
  }
  EXPECT_LT(std::abs(fd_first([&](Cx z) { return g(z); }, 0.0) - g.derivative_at_zero()), 1e-9);
  EXPECT_EQ(SchwarzGenerator::monomial(0.5, 2).derivative_at_zero(), Cx(0.0));
  EXPECT_EQ(SchwarzGenerator::zero().derivative_at_zero(), Cx(0.0));
}

TEST(SampledMember, ZeroGeneratorIsCenterKernel) {
  const ClassParams p = ClassParams::make(0.3, 0.2, Cx(0.4, -0.3), 0.5);
  const SampledMember m = sample_member(SchwarzGenerator::zero(), p);
  for (double r : {0.0, 0.2, 0.7}) {
    const Cx z = std::polar(r, 0.8);
    EXPECT_LT(std::abs(m(z) - extremal_H(z, ExtremalIndex::interior(0.0), p)), 1e-14);
  }
}

TEST(SampledMember, IdentityGeneratorIsBoundaryKernel) {
  const ClassParams p = ClassParams::make(-0.6, 0.1, Cx(-0.2, 0.5), 0.5);
  const SampledMember m = sample_member(SchwarzGenerator::monomial(1.0, 1), p);
  for (int k = 0; k < 32; ++k) {
    const Cx z = std::polar(0.9 * (k % 4 + 1) / 4.0, 2.0 * kPi * k / 32);
    const Cx h = extremal_H(z, ExtremalIndex::from_theta(0.0), p);
    EXPECT_LT(std::abs(m(z) - h), 1e-14 * std::max(1.0, std::abs(h)));
  }
}

TEST(SampledMember, FirstCoefficient) {
  const ClassParams p = ClassParams::make(0.3, 0.4, 0.2, 0.5);
  const SampledMember m = sample_member(SchwarzGenerator::monomial(0.5, 2), p);
  const Cx d = fd_first([&](Cx z) { return m(z); }, 0.0);
  EXPECT_LT(std::abs(d - 2.0 * 0.6 * unit(-0.3) * 0.2 * std::cos(0.3)), 1e-7);
}

TEST(SampledMember, RejectsUnimodularLambda) {
  EXPECT_THROW(sample_member(SchwarzGenerator::zero(), ClassParams::make(0.0, 0.0, 1.0, 0.5)), InvalidParams);
}

TEST(SampledMember, HalfPlaneOnRadialGrid) {
  Rng rng(15);
  for (int i = 0; i < 30; ++i) {
    const ClassParams p = random_class(rng);
    const auto gen = SchwarzGenerator::blaschke(rng.polar(0.0, 1.0), rng.uniform_int(1, 3), {rng.polar(0.0, 0.9)});
    const SampledMember m = sample_member(gen, p);
    for (int k = 0; k < 64; ++k) {
      const Cx z = std::polar(0.99 * (k % 8 + 1) / 8.0, 2.0 * kPi * (k / 8) / 8.0);
      EXPECT_GT(half_plane_margin(m(z), p), 0.0);
    }
  }
}

TEST(SecondCoefficient, Examples) {
  const ClassParams flat = ClassParams::make(0.0, 0.0, 0.0, 0.5);
  EXPECT_LT(check_second_coefficient(SchwarzGenerator::zero(), flat), 1e-6);

  const auto linear = SchwarzGenerator::monomial(0.7, 1);
  const SampledMember m1 = sample_member(linear, flat);
  EXPECT_NEAR(fd_second([&](Cx z) { return m1(z); }, 0.0).real(), 2.8, 1e-6);
  EXPECT_LT(check_second_coefficient(linear, flat), 1e-6);

  const ClassParams half = ClassParams::make(0.0, 0.0, 0.5, 0.5);
  const auto identity = SchwarzGenerator::monomial(1.0, 1);
  const SampledMember m2 = sample_member(identity, half);
  EXPECT_NEAR(fd_second([&](Cx z) { return m2(z); }, 0.0).real(), 4.0, 1e-6);
  EXPECT_LT(check_second_coefficient(identity, half), 1e-6);
}

TEST(SecondCoefficient, RandomGenerators) {
  Rng rng(16);
  for (int i = 0; i < 30; ++i) {
    const ClassParams p = random_class(rng, 0.8);
    const auto gen = SchwarzGenerator::blaschke(rng.polar(0.0, 1.0), rng.uniform_int(1, 2), {rng.polar(0.0, 0.7)});
    EXPECT_LT(check_second_coefficient(gen, p), 1e-6);
  }
}
