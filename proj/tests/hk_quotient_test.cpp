#include <gtest/gtest.h>

#include <random>

#include "spinc/hk_quotient.hpp"
#include "spinc/sampling.hpp"

namespace spinc {
namespace {

// Quaternions as x0 + x1 i + x2 j + x3 k, Hamilton product. Test-only
// oracle for the quaternionic form of the moment map.
struct Quat {
  double x0 = 0, x1 = 0, x2 = 0, x3 = 0;

  static Quat from_pair(cplx a, cplx b) {  // q = a + b j
    return {a.real(), a.imag(), b.real(), b.imag()};
  }
  Quat conj() const { return {x0, -x1, -x2, -x3}; }
  Quat operator*(const Quat& o) const {
    return {x0 * o.x0 - x1 * o.x1 - x2 * o.x2 - x3 * o.x3,
            x0 * o.x1 + x1 * o.x0 + x2 * o.x3 - x3 * o.x2,
            x0 * o.x2 - x1 * o.x3 + x2 * o.x0 + x3 * o.x1,
            x0 * o.x3 + x1 * o.x2 - x2 * o.x1 + x3 * o.x0};
  }
  Quat operator+(const Quat& o) const { return {x0 + o.x0, x1 + o.x1, x2 + o.x2, x3 + o.x3}; }
  Quat scaled(double c) const { return {c * x0, c * x1, c * x2, c * x3}; }
};

hk::LevelSetCoords random_coords(std::mt19937_64& rng, double kappa) {
  PointSampler sample{2};
  ChartPoint p = sample(rng);
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  return {p.z[0], p.z[1], ang(rng), kappa};
}

TEST(HkQuotient, MomentMapSpotValues) {
  double kappa = 3.0;
  double f = eh::f_of(1.0, kappa);  // 2 + sqrt(3)
  hk::AmbientPoint p{{cplx(std::sqrt(f), 0.0), cplx(0.0)},
                     {cplx(0.0), cplx(1.0 / std::sqrt(f), 0.0)}};
  auto m = hk::moment_maps(p, kappa);
  EXPECT_NEAR(m.mu_r, 0.0, 1e-14);
  EXPECT_NEAR(std::abs(m.mu_c), 0.0, 1e-14);

  hk::AmbientPoint zero{{cplx(0.0), cplx(0.0)}, {cplx(0.0), cplx(0.0)}};
  EXPECT_NEAR(hk::moment_maps(zero, kappa).mu_r, -2.0 * std::sqrt(3.0), 1e-15);
}

// mu(q) = (1/2) sum q_a i qbar_a - sqrt(kappa) i packages (mu_r, mu_c) as
// quaternion components (0, mu_r/2, Im mu_c, -Re mu_c).
TEST(HkQuotient, QuaternionOracle) {
  std::mt19937_64 rng(401);
  std::normal_distribution<double> g(0.0, 1.0);
  double kappa = 1.7;
  Quat I{0, 1, 0, 0};
  for (int t = 0; t < 50; ++t) {
    hk::AmbientPoint p{{cplx(g(rng), g(rng)), cplx(g(rng), g(rng))},
                       {cplx(g(rng), g(rng)), cplx(g(rng), g(rng))}};
    Quat mu{0, -std::sqrt(kappa), 0, 0};
    for (int a = 0; a < 2; ++a) {
      Quat q = Quat::from_pair(p.Z[a], p.W[a]);
      mu = mu + (q * I * q.conj()).scaled(0.5);
    }
    auto m = hk::moment_maps(p, kappa);
    EXPECT_NEAR(mu.x0, 0.0, 1e-12);
    EXPECT_NEAR(mu.x1, 0.5 * m.mu_r, 1e-12);
    EXPECT_NEAR(mu.x2, m.mu_c.imag(), 1e-12);
    EXPECT_NEAR(mu.x3, -m.mu_c.real(), 1e-12);
  }
}

TEST(HkQuotient, EmbedSpotValueAndLevelSet) {
  double kappa = 3.0;
  hk::LevelSetCoords c{cplx(1.0, 0.0), cplx(0.0), 0.0, kappa};
  hk::AmbientPoint p = hk::embed(c);
  double f = 2.0 + std::sqrt(3.0);
  EXPECT_NEAR(std::abs(p.Z[0] - std::sqrt(f)), 0.0, 1e-14);
  EXPECT_NEAR(std::abs(p.Z[1]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.W[0]), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(p.W[1] - 1.0 / std::sqrt(f)), 0.0, 1e-14);

  std::mt19937_64 rng(409);
  for (double kap : {0.5, 1.0, 4.0})
    for (int t = 0; t < 200; ++t) {
      auto cc = random_coords(rng, kap);
      auto m = hk::moment_maps(hk::embed(cc), kap);
      EXPECT_NEAR(std::abs(m.mu_r), 0.0, 1e-12);
      EXPECT_NEAR(std::abs(m.mu_c), 0.0, 1e-12);
    }
}

TEST(HkQuotient, PsiShiftIsRightCircleAction) {
  double kappa = 1.2;
  std::mt19937_64 rng(419);
  auto c = random_coords(rng, kappa);
  double t = 0.8;
  hk::LevelSetCoords shifted = c;
  shifted.psi += t;
  hk::AmbientPoint a = hk::embed(shifted);
  hk::AmbientPoint b = hk::embed(c);
  cplx up = std::exp(cplx(0.0, t)), dn = std::exp(cplx(0.0, -t));
  for (int i = 0; i < 2; ++i) {
    EXPECT_NEAR(std::abs(a.Z[i] - up * b.Z[i]), 0.0, 1e-14);
    EXPECT_NEAR(std::abs(a.W[i] - dn * b.W[i]), 0.0, 1e-14);
  }
}

TEST(HkQuotient, PullbackSplitsIntoEhPlusFiber) {
  std::mt19937_64 rng(421);
  std::normal_distribution<double> g(0.0, 1.0);
  for (double kappa : {0.5, 1.0, 4.0}) {
    HermitianMetricField geh = eh::metric(kappa);
    OneForm conn = eh::connection(1, kappa);
    for (int t = 0; t < 70; ++t) {
      auto c = random_coords(rng, kappa);
      hk::Tangent5 v{g(rng), g(rng), g(rng), g(rng), g(rng)};
      auto d = hk::pullback_check(c, v, geh, conn);
      EXPECT_NEAR(d.error(), 0.0, 1e-6 * std::max(1.0, d.ambient));
    }
  }
}

TEST(HkQuotient, PureFiberAndHorizontalDirections) {
  double kappa = 2.0;
  HermitianMetricField geh = eh::metric(kappa);
  OneForm conn = eh::connection(1, kappa);
  std::mt19937_64 rng(431);
  for (int t = 0; t < 20; ++t) {
    auto c = random_coords(rng, kappa);
    double s = c.s();
    double F = eh::F_of(s, kappa);

    // pure psi direction: pullback = s F
    hk::Tangent5 vpsi{0, 0, 0, 0, 1};
    auto d = hk::pullback_check(c, vpsi, geh, conn);
    EXPECT_NEAR(d.ambient, s * F, 1e-6 * s * F);

    // horizontal lift: dpsi chosen so the fiber term vanishes
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<cplx> vz{cplx(g(rng), g(rng)), cplx(g(rng), g(rng))};
    ChartPoint p{c.z1, c.z2};
    cplx Av = eval_one_form(conn.a, p, vz);
    hk::Tangent5 vh{vz[0].real(), vz[0].imag(), vz[1].real(), vz[1].imag(), 2.0 * Av.imag()};
    auto dh = hk::pullback_check(c, vh, geh, conn);
    EXPECT_NEAR(dh.fiber_part, 0.0, 1e-12);
    EXPECT_NEAR(dh.ambient, geh.qform(p, vz), 1e-6 * std::max(1.0, dh.ambient));
  }

  // kappa = 0: pullback = flat metric + s dpsi^2
  hk::LevelSetCoords c0{cplx(0.6, 0.2), cplx(-0.4, 0.9), 1.1, 0.0};
  HermitianMetricField flat = eh::metric(0.0);
  OneForm zero = eh::connection(0, 0.0);
  std::normal_distribution<double> g(0.0, 1.0);
  hk::Tangent5 v{g(rng), g(rng), g(rng), g(rng), g(rng)};
  auto d0 = hk::pullback_check(c0, v, flat, zero);
  double flat_part = std::norm(cplx(v[0], v[1])) + std::norm(cplx(v[2], v[3]));
  EXPECT_NEAR(d0.ambient, flat_part + c0.s() * v[4] * v[4], 1e-6 * std::max(1.0, d0.ambient));
}

// The potential produced by completing the square equals the twisting
// potential of the Dirac sector, coefficient by coefficient.
TEST(HkQuotient, ExtractedPotentialMatchesConnection) {
  for (double kappa : {0.5, 1.3, 4.0}) {
    FormField extracted = hk::quotient_potential(kappa);
    OneForm conn = eh::connection(1, kappa);
    std::mt19937_64 rng(433);
    PointSampler sample{2};
    for (int t = 0; t < 25; ++t) {
      ChartPoint p = sample(rng);
      EXPECT_NEAR((extracted - conn.a).max_abs(p), 0.0, 1e-10);
      // and against the closed form sqrt(kappa) z / (2 s^2 F)
      double s = p.s();
      double c = std::sqrt(kappa) / (2.0 * s * s * eh::F_of(s, kappa));
      for (int nu = 0; nu < 2; ++nu)
        EXPECT_NEAR(std::abs(extracted.coefficient({}, {nu})(p) - c * p.z[nu]), 0.0, 1e-12);
    }
  }
}

TEST(HkQuotient, U2Equivariance) {
  double kappa = 1.8;
  std::mt19937_64 rng(439);

  // identity: exact equality
  std::vector<std::vector<cplx>> id{{cplx(1.0), cplx(0.0)}, {cplx(0.0), cplx(1.0)}};
  auto c = random_coords(rng, kappa);
  auto chk = hk::u2_equivariance(id, c);
  EXPECT_NEAR(chk.embed_error, 0.0, 1e-15);
  EXPECT_NEAR(chk.moment_error, 0.0, 1e-15);

  // diagonal torus
  double al = 0.7;
  std::vector<std::vector<cplx>> diag{{std::exp(cplx(0.0, al)), cplx(0.0)},
                                      {cplx(0.0), std::exp(cplx(0.0, -al))}};
  for (int t = 0; t < 10; ++t) {
    auto cc = random_coords(rng, kappa);
    auto r = hk::u2_equivariance(diag, cc);
    EXPECT_NEAR(r.moment_error, 0.0, 1e-12);
    EXPECT_NEAR(r.embed_error, 0.0, 1e-12);
  }

  // random SU(2) and random U(2)
  for (int t = 0; t < 20; ++t) {
    auto su = random_su2(rng);
    auto cc = random_coords(rng, kappa);
    auto r = hk::u2_equivariance(su, cc);
    EXPECT_NEAR(r.moment_error, 0.0, 1e-12);
    EXPECT_NEAR(r.embed_error, 0.0, 1e-12);

    auto u = random_unitary(rng, 2);
    auto r2 = hk::u2_equivariance(u, cc);
    EXPECT_NEAR(r2.moment_error, 0.0, 1e-12);
    EXPECT_NEAR(r2.embed_error, 0.0, 1e-12);
  }
}

TEST(HkQuotient, RejectsDegenerateCoords) {
  hk::LevelSetCoords bad{cplx(0.0), cplx(0.0), 0.0, 1.0};
  EXPECT_THROW(hk::embed(bad), std::invalid_argument);
}

}  // namespace
}  // namespace spinc
