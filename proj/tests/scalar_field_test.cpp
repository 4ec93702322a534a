#include <gtest/gtest.h>

#include <random>

#include "spinc/numdiff.hpp"
#include "spinc/sampling.hpp"
#include "spinc/scalar_field.hpp"

namespace spinc {
namespace {

ScalarField eh_profile_F(double kappa, int dim) {
  ScalarField s = ScalarField::radius_sq(dim);
  return pow_real(ScalarField::constant(1.0) + kappa * pow_int(s, -2), 0.5);
}

TEST(ScalarField, BasicEvaluation) {
  int dim = 2;
  ChartPoint p{cplx(1.0, 2.0), cplx(-0.5, 0.25)};
  ScalarField z0 = ScalarField::coordinate(0, dim);
  ScalarField z1b = ScalarField::coordinate_bar(1, dim);
  ScalarField s = ScalarField::radius_sq(dim);

  EXPECT_EQ(z0(p), cplx(1.0, 2.0));
  EXPECT_EQ(z1b(p), std::conj(p.z[1]));
  EXPECT_NEAR(s(p).real(), 5.0 + 0.3125, 1e-15);
  EXPECT_EQ(s(p).imag(), 0.0);

  ScalarField expr = (z0 * z1b + 3.0 * s) / (s - cplx(0.5, 0.0));
  cplx expect = (p.z[0] * std::conj(p.z[1]) + 3.0 * p.s()) / (p.s() - 0.5);
  EXPECT_NEAR(std::abs(expr(p) - expect), 0.0, 1e-14);
}

TEST(ScalarField, CoordinateDerivatives) {
  int dim = 3;
  ScalarField z1 = ScalarField::coordinate(1, dim);
  ChartPoint p{cplx(0.3, 0.1), cplx(1.0, -1.0), cplx(0.2, 0.9)};
  EXPECT_EQ(z1.d_z(1)(p), cplx(1.0));
  EXPECT_EQ(z1.d_z(0)(p), cplx(0.0));
  EXPECT_EQ(z1.d_zbar(1)(p), cplx(0.0));

  ScalarField s = ScalarField::radius_sq(dim);
  // d s = sum (zbar_mu dz_mu + z_mu dzbar_mu)
  for (int mu = 0; mu < dim; ++mu) {
    EXPECT_EQ(s.d_z(mu)(p), std::conj(p.z[mu]));
    EXPECT_EQ(s.d_zbar(mu)(p), p.z[mu]);
  }
}

// Analytic Wirtinger derivatives agree with central finite differences.
TEST(ScalarField, WirtingerMatchesFiniteDifferences) {
  int dim = 2;
  double kappa = 1.7;
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = eh_profile_F(kappa, dim);
  ScalarField f = F + std::sqrt(kappa) / s;
  ScalarField z0 = ScalarField::coordinate(0, dim);
  ScalarField z1b = ScalarField::coordinate_bar(1, dim);

  ScalarField field = pow_int(z0, 3) * z1b / (F * pow_int(s, 2) * pow_real(f, 1.5)) +
                      conj(z0) * pow_real(s, 0.25);

  std::mt19937_64 rng(2024);
  PointSampler sample{dim};
  FiniteDiff fd;
  auto fn = [&](const ChartPoint& q) { return field(q); };

  for (int trial = 0; trial < 50; ++trial) {
    ChartPoint p = sample(rng);
    for (int mu = 0; mu < dim; ++mu)
      for (bool bar : {false, true}) {
        cplx analytic = field.wirtinger(mu, bar)(p);
        cplx numeric = fd.wirtinger(fn, p, mu, bar);
        double scale = std::max(1.0, std::abs(analytic));
        EXPECT_NEAR(std::abs(analytic - numeric) / scale, 0.0, 1e-6);
      }
  }
}

// conj(F) has d_z(conj F) = conj(d_zbar F) componentwise.
TEST(ScalarField, ConjugationConsistency) {
  int dim = 2;
  ScalarField z0 = ScalarField::coordinate(0, dim);
  ScalarField z1 = ScalarField::coordinate(1, dim);
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField field = pow_int(z0, 2) * conj(z1) / s + z1 * z1;
  ScalarField cf = conj(field);

  std::mt19937_64 rng(7);
  PointSampler sample{dim};
  for (int trial = 0; trial < 20; ++trial) {
    ChartPoint p = sample(rng);
    for (int mu = 0; mu < dim; ++mu) {
      cplx lhs = cf.d_z(mu)(p);
      cplx rhs = std::conj(field.d_zbar(mu)(p));
      EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-14);
    }
  }
}

TEST(ScalarField, SecondDerivativesExact) {
  int dim = 2;
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = eh_profile_F(0.8, dim);
  ScalarField field = pow_int(s, 3) * F;

  // d^2/dz0 dzbar0 via two analytic passes vs finite differences of the
  // first analytic derivative.
  ScalarField d1 = field.d_z(0);
  ScalarField d2 = d1.d_zbar(0);

  FiniteDiff fd;
  std::mt19937_64 rng(99);
  PointSampler sample{dim};
  auto d1fn = [&](const ChartPoint& q) { return d1(q); };
  for (int trial = 0; trial < 20; ++trial) {
    ChartPoint p = sample(rng);
    cplx numeric = fd.wirtinger(d1fn, p, 0, true);
    EXPECT_NEAR(std::abs(d2(p) - numeric) / std::max(1.0, std::abs(d2(p))), 0.0, 1e-6);
  }
}

TEST(ScalarField, RadialNodeChainRule) {
  int dim = 2;
  // G(s) = s^2 expressed through the radial node; derivative must chain.
  ScalarField g = ScalarField::radial(
      dim, [](double s) { return s * s; },
      [dim](const ScalarField&) { return 2.0 * ScalarField::radius_sq(dim); });
  ChartPoint p{cplx(1.0, 0.5), cplx(0.25, -0.75)};
  double s = p.s();
  EXPECT_NEAR(g(p).real(), s * s, 1e-13);
  EXPECT_NEAR(std::abs(g.d_z(0)(p) - 2.0 * s * std::conj(p.z[0])), 0.0, 1e-12);
  EXPECT_NEAR(std::abs(g.d_zbar(1)(p) - 2.0 * s * p.z[1]), 0.0, 1e-12);
}

TEST(ScalarField, DimensionMismatchRejected) {
  ScalarField a = ScalarField::coordinate(0, 2);
  ScalarField b = ScalarField::coordinate(0, 3);
  EXPECT_THROW(a + b, std::invalid_argument);
  ChartPoint p{cplx(1.0, 0.0)};
  EXPECT_THROW(a(p), std::invalid_argument);
}

// F' s = F^{-1} - F and the f identities, exercised through the engine.
TEST(ScalarField, ProfileIdentities) {
  int dim = 2;
  double kappa = 2.5;
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = eh_profile_F(kappa, dim);
  ScalarField f = F + std::sqrt(kappa) / s;

  std::mt19937_64 rng(31);
  PointSampler sample{dim};
  for (int trial = 0; trial < 30; ++trial) {
    ChartPoint p = sample(rng);
    double sv = p.s();
    // dF/ds recovered from the Wirtinger derivative: dF/dz_mu = F'(s) zbar_mu.
    cplx Fp = F.d_z(0)(p) / std::conj(p.z[0]);
    cplx lhs = Fp * sv;
    cplx rhs = 1.0 / F(p) - F(p);
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12);

    EXPECT_NEAR(std::abs(f(p) - 1.0 / f(p) - 2.0 * std::sqrt(kappa) / sv), 0.0, 1e-12);
    EXPECT_NEAR(std::abs(f(p) + 1.0 / f(p) - 2.0 * F(p)), 0.0, 1e-12);
  }
}

}  // namespace
}  // namespace spinc
