#include <gtest/gtest.h>

#include <random>

#include "spinc/l2_analysis.hpp"
#include "spinc/sampling.hpp"

namespace spinc {
namespace {

// C^2-smooth compactly supported bump in s on [a, b], with the radial
// node chain carrying enough derivatives for one exterior derivative of
// its differential.
ScalarField bump_field(int dim, double a, double b) {
  auto in = [a, b](double t) { return t > a && t < b; };
  auto v0 = [a, b, in](double t) {
    return in(t) ? std::pow(t - a, 3) * std::pow(b - t, 3) : 0.0;
  };
  auto v1 = [a, b, in](double t) {
    return in(t) ? 3 * std::pow(t - a, 2) * std::pow(b - t, 3) -
                       3 * std::pow(t - a, 3) * std::pow(b - t, 2)
                 : 0.0;
  };
  auto v2 = [a, b, in](double t) {
    return in(t) ? 6 * (t - a) * std::pow(b - t, 3) - 18 * std::pow(t - a, 2) * std::pow(b - t, 2) +
                       6 * std::pow(t - a, 3) * (b - t)
                 : 0.0;
  };
  auto v3 = [a, b, in](double t) {
    return in(t) ? 6 * std::pow(b - t, 3) - 54 * (t - a) * std::pow(b - t, 2) +
                       54 * std::pow(t - a, 2) * (b - t) - 6 * std::pow(t - a, 3)
                 : 0.0;
  };
  ScalarField f3 = ScalarField::radial(dim, v3, [](const ScalarField&) {
    return ScalarField::constant(0.0);
  });
  ScalarField f2 = ScalarField::radial(dim, v2, [f3](const ScalarField&) { return f3; });
  ScalarField f1 = ScalarField::radial(dim, v1, [f2](const ScalarField&) { return f2; });
  return ScalarField::radial(dim, v0, [f1](const ScalarField&) { return f1; });
}

TEST(AngularAverage, ClosedFormValues) {
  EXPECT_NEAR(angular_average(0, 0), 1.0, 1e-15);
  EXPECT_NEAR(angular_average(1, 0), 0.5, 1e-15);
  EXPECT_NEAR(angular_average(0, 1), 0.5, 1e-15);
  EXPECT_NEAR(angular_average(1, 1), 1.0 / 6.0, 1e-15);
  EXPECT_NEAR(angular_average(2, 1), 1.0 / 12.0, 1e-15);
  EXPECT_NEAR(angular_average_general({1, 1}), 1.0 / 6.0, 1e-15);
}

// Monte-Carlo confirmation of the sphere averages before anything relies
// on them.
TEST(AngularAverage, MonteCarloOracle) {
  std::mt19937_64 rng(501);
  std::normal_distribution<double> g(0.0, 1.0);
  auto sphere_point = [&](int d) {
    std::vector<cplx> z(d);
    double nrm = 0.0;
    for (auto& c : z) {
      c = cplx(g(rng), g(rng));
      nrm += std::norm(c);
    }
    nrm = std::sqrt(nrm);
    for (auto& c : z) c /= nrm;
    return z;
  };

  const int N = 1000000;
  double acc10 = 0.0, acc11 = 0.0;
  for (int t = 0; t < N; ++t) {
    auto z = sphere_point(2);
    double a0 = std::norm(z[0]), a1 = std::norm(z[1]);
    acc10 += a0;
    acc11 += a0 * a1;
  }
  EXPECT_NEAR(acc10 / N, angular_average(1, 0), 1e-3);
  EXPECT_NEAR(acc11 / N, angular_average(1, 1), 1e-3);

  // general n = 2 case
  const int M = 400000;
  double acc = 0.0;
  for (int t = 0; t < M; ++t) {
    auto z = sphere_point(3);
    acc += std::norm(z[0]) * std::norm(z[1]);
  }
  EXPECT_NEAR(acc / M, angular_average_general({1, 1, 0}), 2e-3);
}

TEST(RadialIntegral, KnownConvergentAndDivergent) {
  // int_0^smax s e^{-s}-like: finite
  RadialIntegrand fin;
  fin.profile = [](double s) { return s / std::pow(1.0 + s, 4); };
  fin.small_s_exponent = 1.0;
  fin.large_s_exponent = -3.0;
  auto rf = radial_integral(fin);
  EXPECT_EQ(rf.tag, IntegralTag::Finite);
  EXPECT_NEAR(rf.value, 1.0 / 6.0, 1e-6);  // exact: 1/6

  RadialIntegrand logd;
  logd.profile = [](double s) { return 1.0 / (s * (1.0 + s * s)); };
  logd.small_s_exponent = -1.0;
  logd.large_s_exponent = -3.0;
  EXPECT_EQ(radial_integral(logd).tag, IntegralTag::LogDivergent);

  RadialIntegrand pow2;
  pow2.profile = [](double s) { return 1.0 / (s * s * (1.0 + s * s)); };
  pow2.small_s_exponent = -2.0;
  pow2.large_s_exponent = -4.0;
  EXPECT_EQ(radial_integral(pow2).tag, IntegralTag::PowerDivergent);
}

TEST(L2Integral, EhExamples) {
  auto finite = l2_integral_eh(ZeroModeSpec::eh(0, 0, 1, 1.0));
  EXPECT_EQ(finite.tag, IntegralTag::Finite);
  EXPECT_GT(finite.value, 0.0);

  // stability of the finite value under an extra decade of cutoff
  RadialIntegrand f;
  double norm = M_PI * M_PI * angular_average(0, 0);
  f.profile = [norm](double s) {
    return norm * std::pow(s, -2) / (eh::F_of(s, 1.0) * eh::f_of(s, 1.0));
  };
  f.small_s_exponent = 0.0;
  f.large_s_exponent = -2.0;
  QuadResult direct = integrate(f.profile, 1e-7, 1e4, 1e-10, 1e-9);
  double tail = f.profile(1e4) * 1e4;
  EXPECT_NEAR(finite.value, direct.value + tail, 1e-6 * finite.value);

  EXPECT_EQ(l2_integral_eh(ZeroModeSpec::eh(0, 0, 0, 1.0)).tag, IntegralTag::LogDivergent);
  EXPECT_EQ(l2_integral_eh(ZeroModeSpec::eh(2, 0, 1, 1.0)).tag, IntegralTag::PowerDivergent);
}

// Quadrature finiteness agrees with the analytic classification across
// the sweep.
TEST(L2Integral, AgreesWithAnalyticClassification) {
  for (int ell = 0; ell <= 5; ++ell)
    for (int twoN = 0; twoN <= 6; ++twoN) {
      auto tag = l2_integral_eh(ZeroModeSpec::eh(twoN, twoN % 2 == 0 ? 0 : 1, ell, 1.0)).tag;
      EXPECT_EQ(to_norm_class(tag), classify_eh(twoN, ell))
          << "twoN=" << twoN << " ell=" << ell;
    }
}

TEST(L2Integral, GeneralExamples) {
  EXPECT_EQ(l2_integral_general(ZeroModeSpec::general(2, {0, 0, 0}, 1, 1.0)).tag,
            IntegralTag::Finite);
  EXPECT_EQ(l2_integral_general(ZeroModeSpec::general(2, {1, 0, 0}, 1, 1.0)).tag,
            IntegralTag::LogDivergent);
  EXPECT_EQ(l2_integral_general(ZeroModeSpec::general(3, {0, 0, 0, 0}, 0, 1.0)).tag,
            IntegralTag::LogDivergent);
  EXPECT_EQ(l2_integral_general(ZeroModeSpec::general(2, {2, 0, 0}, 1, 1.0)).tag,
            IntegralTag::PowerDivergent);
}

TEST(L2Integral, GeneralAgreesWithAnalyticClassification) {
  for (int n : {2, 3})
    for (int ell = 0; ell <= 3; ++ell)
      for (int delta = 0; delta <= 4; ++delta) {
        std::vector<int> exps(n + 1, 0);
        exps[0] = delta;
        auto tag = l2_integral_general(ZeroModeSpec::general(n, exps, ell, 1.0)).tag;
        EXPECT_EQ(to_norm_class(tag), classify_general(delta, ell, n))
            << "n=" << n << " delta=" << delta << " ell=" << ell;
      }
}

// Every declared asymptotic exponent must agree with the measured
// log-log slope of the profile it annotates.
TEST(RadialIntegrand, DeclaredExponentsMatchSlopes) {
  for (int ell : {0, 1, 3})
    for (int twoN : {0, 2, 5}) {
      auto c = check_exponents(eh_mode_integrand(ZeroModeSpec::eh(twoN, twoN % 2, ell, 1.0)));
      EXPECT_TRUE(c.ok()) << "eh twoN=" << twoN << " ell=" << ell << " small "
                          << c.small_measured << " vs " << c.small_declared << ", large "
                          << c.large_measured << " vs " << c.large_declared;
    }
  for (int ell : {0, 2})
    for (int delta : {0, 2}) {
      std::vector<int> exps(3, 0);
      exps[1] = delta;
      auto c =
          check_exponents(general_mode_integrand(ZeroModeSpec::general(2, exps, ell, 1.0)));
      EXPECT_TRUE(c.ok()) << "general delta=" << delta << " ell=" << ell;
    }
  // flat reduction declares the harsher bare power
  auto flat = check_exponents(eh_mode_integrand(ZeroModeSpec::eh(0, 0, 0, 0.0)));
  EXPECT_TRUE(flat.ok());
  EXPECT_NEAR(flat.small_declared, -2.0, 1e-12);
}

// Quadrature breakdown is reported as its own tag, never conflated with
// a divergence classification.
TEST(RadialIntegral, NonConvergenceIsDistinct) {
  RadialIntegrand f;
  f.profile = [](double s) { return (1.0 + std::sin(1.0 / (s * s))) / (1.0 + s * s * s); };
  f.small_s_exponent = 0.0;
  f.large_s_exponent = -3.0;
  EXPECT_EQ(radial_integral(f).tag, IntegralTag::NonConvergent);
}

// kappa = 0 reduces everything to flat space: the untwisted operator
// still annihilates the mode family pointwise on shells, but none of the
// norms is integrable.
TEST(FlatReduction, ResidualsVanishNormsDiverge) {
  double kappa = 0.0;
  HermitianMetricField g = eh::metric(kappa);
  OneForm A = eh::connection(0, kappa);
  std::mt19937_64 rng(541);
  PointSampler shell{2, 1.0, 2.0};
  for (int twoN : {0, 1, 2}) {
    ZeroModeSpec spec = ZeroModeSpec::eh(twoN, -twoN, 0, kappa);
    FormField mode = eh_zero_mode(spec);
    SpinorField Ds = twisted_dirac(mode, A, g);
    for (int t = 0; t < 15; ++t) {
      ChartPoint p = shell(rng);
      double den = std::sqrt(pointwise_norm_sq(mode, g, p));
      EXPECT_NEAR(std::sqrt(pointwise_norm_sq(Ds, g, p)) / den, 0.0, 1e-10);
    }
    EXPECT_NE(l2_integral_eh(spec).tag, IntegralTag::Finite);
  }
}

TEST(L2NormForm, L2FormFiniteBetaLogDivergent) {
  // |l2_form|^2 = 16/(s^2+kappa)^2, so the total norm is exactly
  // (Vol(S^3)/2) * 16 * int s/(s^2+kappa)^2 ds = 8 pi^2 / kappa.
  for (double kappa : {0.5, 1.0, 2.0}) {
    auto res = l2_norm_form(eh::l2_form(kappa), eh::metric(kappa), 1, 0.0, -4.0);
    EXPECT_EQ(res.tag, IntegralTag::Finite);
    double expect = 8.0 * M_PI * M_PI / kappa;
    EXPECT_NEAR(res.value, expect, 1e-8 * expect);
  }
  {
    double kappa = 1.0;
    int n = 2;
    auto res = l2_norm_form(calabi_l2_form(n, kappa), calabi_metric(n, kappa), n, 0.0, -6.0);
    EXPECT_EQ(res.tag, IntegralTag::Finite);
  }
  {
    // |beta|^2 = 1/(s^{2n+1} F^n): s^{-n-1} near zero, s^{-2n-1} far out
    double kappa = 1.0;
    int n = 1;
    auto res = l2_norm_form(calabi_beta(n, kappa), calabi_metric(n, kappa), n, -2.0, -3.0);
    EXPECT_EQ(res.tag, IntegralTag::LogDivergent);
  }
}

TEST(Flux, QuantisedValues) {
  auto f12 = flux(FluxTask{1, 2, 3.0});
  EXPECT_NEAR(f12.value, 2.0, 1e-6);
  auto f23 = flux(FluxTask{2, 3, 7.0});
  EXPECT_NEAR(f23.value, 3.0, 1e-6);
  auto f0 = flux(FluxTask{1, 0, 1.0});
  EXPECT_NEAR(f0.value, 0.0, 1e-9);
  auto f11 = flux(FluxTask{1, 1, 1.0});
  EXPECT_NEAR(f11.value, 1.0, 1e-6);
}

TEST(Flux, KappaInvariance) {
  for (double kappa : {0.5, 1.0, 3.0, 7.0}) {
    auto f = flux(FluxTask{2, 2, kappa});
    EXPECT_NEAR(f.value, 2.0, 1e-6);
  }
}

// Shifting the restricted connection by an exact imaginary form moves
// the flux by nothing beyond quadrature noise.
TEST(Flux, GaugeRobust) {
  int n = 1, ell = 2;
  double kappa = 3.0;
  double kpow = std::pow(kappa, double(n) / double(n + 1));
  cplx chain = cplx(0.0, -0.5) * double(ell) * kpow * cplx(0.0, 2.0) / (double(n + 1) * kpow);
  OneForm restricted = chain * base_connection_form(n);

  ScalarField bump = bump_field(1, 0.2, 4.0);
  OneForm gauge = cplx(0.0, 1.0) * d_of_function(bump, 1);

  auto base = flux_of_base_form(restricted);
  auto shifted = flux_of_base_form(restricted + gauge);
  EXPECT_NEAR(base.value, double(ell), 1e-6);
  EXPECT_NEAR(shifted.value - base.value, 0.0, 1e-8);
}

// det g = 1: the Riemannian volume of a coordinate ball equals its
// Lebesgue volume. Monte-Carlo over the realified metric.
TEST(Measure, EhVolumeIsLebesgue) {
  double kappa = 1.4;
  HermitianMetricField g = eh::metric(kappa);
  std::mt19937_64 rng(521);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  const int N = 2000;
  double acc = 0.0;
  int kept = 0;
  while (kept < N) {
    ChartPoint p{cplx(u(rng), u(rng)), cplx(u(rng), u(rng))};
    double r2 = p.s();
    if (r2 > 1.0 || r2 < 1e-3) continue;
    // realified 4x4 metric via the polarised quadratic form
    std::vector<std::vector<cplx>> basis{{cplx(1, 0), 0}, {cplx(0, 1), 0},
                                         {0, cplx(1, 0)}, {0, cplx(0, 1)}};
    CMat m(4);
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j) m(i, j) = g.qform(p, basis[i], basis[j]);
    acc += std::sqrt(lu_det(m).real());
    ++kept;
  }
  EXPECT_NEAR(acc / N, 1.0, 5e-3);
}

}  // namespace
}  // namespace spinc
