#pragma once

#include <random>

#include "spinc/hk_quotient.hpp"
#include "spinc/l2_analysis.hpp"
#include "spinc/numdiff.hpp"
#include "spinc/report.hpp"
#include "spinc/sampling.hpp"
#include "spinc/zero_modes.hpp"

namespace spinc {
namespace suites {

// Each suite sweeps its identities over seeded sample points and appends
// one record per identity, carrying the worst residual seen.

inline void run_eh(const RunConfig& cfg, Report& rep) {
  std::mt19937_64 rng(cfg.seed);
  PointSampler sample{2};
  int N = cfg.samples;

  std::vector<double> kappas{0.5, 4.0};
  if (cfg.kappa != 0.5 && cfg.kappa != 4.0) kappas.insert(kappas.begin() + 1, cfg.kappa);
  for (double kappa : kappas) {
    std::string kp = "kappa=" + format_double(kappa);
    HermitianMetricField g = eh::metric(kappa);
    FormField omega = eh::kahler_form(kappa);
    FormField omt = eh::l2_form(kappa);
    OneForm th = eh::theta3(kappa);
    TwoFormPieces dth = one_form_derivative(th);
    OneForm conn = eh::connection(cfg.ell_max > 0 ? cfg.ell_max : 1, kappa);
    TwoFormPieces dA = one_form_derivative(conn);
    eh::Frame fr = eh::frame(kappa);
    FormDerivative domega = exterior_derivative(omega);
    FormDerivative domt = exterior_derivative(omt);

    double det_err = 0, inv_err = 0, domega_err = 0, domt_err = 0, sd_err = 0, asd_err = 0,
           theta_err = 0, split_err = 0, conn_imag = 0, conn_curv = 0, frame_err = 0,
           recon_err = 0, u2_err = 0, rt_err = 0, prof_err = 0;
    double conn_scale = 0.5 * double(cfg.ell_max > 0 ? cfg.ell_max : 1) * std::sqrt(kappa);
    for (int t = 0; t < N; ++t) {
      ChartPoint p = sample(rng);
      det_err = std::max(det_err, std::abs(lu_det(g.eval_g(p)) - cplx(1.0)));
      inv_err = std::max(inv_err, max_abs_diff(g.eval_ginv(p), inverse(g.eval_g(p))));
      domega_err = std::max(domega_err, domega.holo.max_abs(p) + domega.anti.max_abs(p));
      domt_err = std::max(domt_err, domt.holo.max_abs(p) + domt.anti.max_abs(p));
      sd_err = std::max(sd_err, (hodge_star_2(omega, g) - omega).max_abs(p));
      asd_err = std::max(asd_err, (hodge_star_2(omt, g) + omt).max_abs(p));
      theta_err = std::max(theta_err, (2.0 * dth.f11 - (omega - kappa * omt)).max_abs(p) +
                                          dth.f20.max_abs(p) + dth.f02.max_abs(p));
      FormField star_dth = hodge_star_2(dth.f11, g);
      split_err = std::max(split_err, (star_dth + dth.f11 - omega).max_abs(p) +
                                          (star_dth - dth.f11 - kappa * omt).max_abs(p));
      OneForm cc = conj(conn);
      conn_imag = std::max(conn_imag, (conn.h + cc.h).max_abs(p) + (conn.a + cc.a).max_abs(p));
      conn_curv = std::max(conn_curv,
                           (dA.f11 - cplx(0.0, -1.0) * conn_scale * omt).max_abs(p) +
                               dA.f20.max_abs(p) + dA.f02.max_abs(p));
      frame_err = std::max(frame_err,
                           std::abs(pointwise_norm_sq(fr.e1, g, p) - 1.0) +
                               std::abs(pointwise_norm_sq(fr.e2, g, p) - 1.0) +
                               std::abs(hermitian_pairing(fr.e1, fr.e2, g, p)));
      FormField recon =
          cplx(0.0, 2.0) * (wedge(fr.e1, conj(fr.e1)) + wedge(fr.e2, conj(fr.e2)));
      recon_err = std::max(recon_err, (recon - omega).max_abs(p));

      auto U = random_unitary(rng, 2);
      auto v = random_tangent(rng, 2);
      ChartPoint Up{apply_matrix(U, p.z)};
      u2_err = std::max(u2_err, std::abs(g.qform(Up, apply_matrix(U, v)) - g.qform(p, v)) /
                                    std::max(1.0, g.qform(p, v)));

      ChartPoint q = p;
      if (q.z[1].real() < 0.0) q.z[1] = -q.z[1];
      rt_err = std::max(rt_err, eh::bundle_round_trip(q).error);

      double s = p.s();
      double F = eh::F_of(s, kappa), f = eh::f_of(s, kappa);
      prof_err = std::max({prof_err, std::abs(f - 1.0 / f - 2.0 * std::sqrt(kappa) / s),
                           std::abs(f + 1.0 / f - 2.0 * F)});
    }
    rep.add("eh.metric.det." + kp, "det g = 1", det_err, rep.config.tol("det", 1e-10));
    rep.add("eh.metric.inverse." + kp, "closed-form inverse vs numeric inverse", inv_err,
            rep.config.tol("inverse", 1e-10));
    rep.add("eh.profiles.f-identities." + kp, "f -/+ 1/f = 2 sqrt(kappa)/s, 2F", prof_err, 1e-12);
    rep.add("eh.form.kahler-closed." + kp, "d omega = 0", domega_err, rep.config.tol("dform", 1e-8));
    rep.add("eh.form.l2-closed." + kp, "d omegaTilde = 0", domt_err, rep.config.tol("dform", 1e-8));
    rep.add("eh.form.kahler-self-dual." + kp, "*omega = omega", sd_err,
            rep.config.tol("hodge", 1e-8));
    rep.add("eh.form.l2-anti-self-dual." + kp, "*omegaTilde = -omegaTilde", asd_err,
            rep.config.tol("hodge", 1e-8));
    rep.add("eh.form.theta3." + kp, "2 d theta3 = omega - kappa omegaTilde", theta_err, 1e-9);
    rep.add("eh.form.theta3-split." + kp, "omega, kappa omegaTilde = *d theta3 +/- d theta3",
            split_err, 1e-9);
    rep.add("eh.connection.imaginary." + kp, "A + conj(A) = 0", conn_imag, 1e-12);
    rep.add("eh.connection.curvature." + kp,
            "d A = -(i/2) l sqrt(kappa) omegaTilde, anti-self-dual", conn_curv, 1e-9);
    rep.add("eh.frame.unitary." + kp, "|e1| = |e2| = 1, <e1,e2> = 0", frame_err, 1e-9);
    rep.add("eh.frame.kahler." + kp, "omega = 2i (e1 e1bar + e2 e2bar)", recon_err, 1e-9);
    rep.add("eh.isometry.u2." + kp, "U(2) pullback invariance", u2_err, 1e-10);
    rep.add("eh.chart.bundle-round-trip." + kp, "(z) -> (w,zeta) -> (z)", rt_err, 1e-12);
  }

  // bi-axial chart pullback, kappa fixed by the config
  {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> gauss(0.0, 1.0);
    double kappa = cfg.kappa;
    HermitianMetricField g = eh::metric(kappa);
    double h = 1e-6, err = 0;
    for (int t = 0; t < std::min(N, 20); ++t) {
      eh::BiaxialPoint b{std::pow(kappa, 0.25) * (1.1 + unit(rng)), 0.3 + 2.4 * unit(rng),
                         2.0 * M_PI * unit(rng), 2.0 * M_PI * unit(rng)};
      std::array<double, 4> du{gauss(rng), gauss(rng), gauss(rng), gauss(rng)};
      ChartPoint pp = eh::from_biaxial({b.r + h * du[0], b.theta + h * du[1], b.phi + h * du[2],
                                        b.psi + h * du[3]},
                                       kappa);
      ChartPoint pm = eh::from_biaxial({b.r - h * du[0], b.theta - h * du[1], b.phi - h * du[2],
                                        b.psi - h * du[3]},
                                       kappa);
      std::vector<cplx> v{(pp.z[0] - pm.z[0]) / (2 * h), (pp.z[1] - pm.z[1]) / (2 * h)};
      double lhs = g.qform(eh::from_biaxial(b, kappa), v);
      double rhs = eh::biaxial_metric_form(b, du, kappa);
      err = std::max(err, std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)));
    }
    rep.add("eh.chart.biaxial-pullback", "bi-axial metric pullback matches", err, 1e-8);
  }
}

inline void run_calabi(const RunConfig& cfg, Report& rep) {
  std::mt19937_64 rng(cfg.seed + 1);
  int N = cfg.samples;
  for (int n : {cfg.n, cfg.n == 2 ? 3 : 2}) {
    std::string np = "n=" + std::to_string(n);
    double kappa = cfg.kappa;
    int dim = n + 1;
    PointSampler sample{dim};
    HermitianMetricField g = calabi_metric(n, kappa);
    FormField beta = calabi_beta(n, kappa);
    SpinorField Dbeta = dirac(SpinorField::from_form(beta), g);
    FormField omega = calabi_kahler_form(n, kappa);
    FormField omt = calabi_l2_form(n, kappa);
    FormField pot = pow_int(calabi_F(n, kappa), -n) * z_dzbar(dim);
    FormField killing_rhs = cplx(0.0, 2.0) * exterior_derivative(pot).holo;
    FormDerivative domt = exterior_derivative(omt);

    double det_err = 0, inv_err = 0, trace_err = 0, beta_err = 0, beta_norm_err = 0,
           closed_err = 0, comp_err = 0, killing_err = 0, u_err = 0, lagrange_err = 0;
    for (int t = 0; t < N; ++t) {
      ChartPoint p = sample(rng);
      det_err = std::max(det_err, std::abs(lu_det(g.eval_g(p)) - cplx(1.0)));
      inv_err = std::max(inv_err, max_abs_diff(g.eval_ginv(p), inverse(g.eval_g(p))));

      double F = calabi_F_of(p.s(), n, kappa);
      CMat K = g.eval_ginv(p);
      cplx tr(0.0), zKz(0.0);
      for (int mu = 0; mu < dim; ++mu) tr += K(mu, mu);
      for (int mu = 0; mu < dim; ++mu)
        for (int nu = 0; nu < dim; ++nu) zKz += std::conj(p.z[mu]) * p.z[nu] * K(nu, mu);
      trace_err = std::max({trace_err, std::abs(tr - (double(n) / F + std::pow(F, n))),
                            std::abs(zKz - p.s() * std::pow(F, n))});

      beta_err = std::max(beta_err, Dbeta.max_abs(p));
      double b2 = 1.0 / (std::pow(p.s(), 2 * n + 1) * std::pow(F, n));
      beta_norm_err =
          std::max(beta_norm_err, std::abs(pointwise_norm_sq(beta, g, p) - b2) / b2);

      closed_err = std::max(closed_err, domt.holo.max_abs(p) + domt.anti.max_abs(p));

      double chi = 1.0 / (std::pow(p.s(), n + 1) * std::pow(F, n));
      double chip = -(1.0 + n / std::pow(F, n + 1)) / (std::pow(p.s(), n + 2) * std::pow(F, n));
      for (int mu = 0; mu < dim; ++mu)
        for (int nu = 0; nu < dim; ++nu) {
          cplx expect =
              cplx(0.0, 2.0) * (chip * std::conj(p.z[mu]) * p.z[nu] + (mu == nu ? chi : 0.0));
          comp_err = std::max(comp_err, std::abs(omt.coefficient({mu}, {nu})(p) - expect));
        }

      killing_err = std::max(killing_err, (omega - kappa * omt - killing_rhs).max_abs(p));

      auto U = random_unitary(rng, dim);
      auto v = random_tangent(rng, dim);
      ChartPoint Up{apply_matrix(U, p.z)};
      u_err = std::max(u_err, std::abs(g.qform(Up, apply_matrix(U, v)) - g.qform(p, v)) /
                                  std::max(1.0, g.qform(p, v)));

      double vv = 0.0;
      cplx zv(0.0);
      for (int i = 0; i < dim; ++i) {
        vv += std::norm(v[i]);
        zv += std::conj(p.z[i]) * v[i];
      }
      double rhs = std::norm(zv);
      for (int i = 0; i < dim; ++i)
        for (int j = i + 1; j < dim; ++j) rhs += std::norm(p.z[i] * v[j] - p.z[j] * v[i]);
      lagrange_err = std::max(lagrange_err,
                              std::abs(p.s() * vv - rhs) / std::max(1.0, p.s() * vv));
    }
    rep.add("calabi.metric.det." + np, "det g = 1", det_err, rep.config.tol("det", 1e-10));
    rep.add("calabi.metric.inverse." + np, "closed-form inverse vs numeric inverse", inv_err,
            rep.config.tol("inverse", 1e-10));
    rep.add("calabi.metric.traces." + np, "tr ginv = n/F + F^n; z ginv zbar = s F^n", trace_err,
            1e-10);
    rep.add("calabi.beta.zero-mode." + np, "D beta = 0", beta_err, 1e-9);
    rep.add("calabi.beta.norm." + np, "|beta|^2 = 1/(s^{2n+1} F^n)", beta_norm_err, 1e-10);
    rep.add("calabi.l2form.closed." + np, "d omegaTilde = 0", closed_err, 1e-8);
    rep.add("calabi.l2form.components." + np, "omegaTilde = 2i(chi' zbar z + chi delta)",
            comp_err, 1e-10);
    rep.add("calabi.killing." + np, "omega - kappa omegaTilde = 2i d(z dzbar / F^n)",
            killing_err, 1e-9);
    rep.add("calabi.isometry." + np, "U(n+1) pullback invariance", u_err, 1e-10);
    rep.add("calabi.identity.lagrange." + np, "s|dz|^2 = |zbar dz|^2 + sum |z_i dz_j - z_j dz_i|^2",
            lagrange_err, 1e-12);
  }
}

inline ScalarField random_coefficient(std::mt19937_64& rng, int dim) {
  std::uniform_int_distribution<int> pick(0, 2), expo(1, 2);
  std::normal_distribution<double> gau(0.0, 1.0);
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField acc = ScalarField::constant(cplx(gau(rng), gau(rng)));
  for (int t = 0; t < 3; ++t) {
    int mu = pick(rng) % dim;
    ScalarField piece;
    switch (pick(rng)) {
      case 0: piece = ScalarField::coordinate(mu, dim); break;
      case 1: piece = ScalarField::coordinate_bar(mu, dim); break;
      default: piece = pow_int(s, -expo(rng)); break;
    }
    acc = acc * piece + ScalarField::constant(cplx(gau(rng), gau(rng)));
  }
  return acc;
}

inline void run_dirac(const RunConfig& cfg, Report& rep) {
  std::mt19937_64 rng(cfg.seed + 2);
  PointSampler sample{2};
  double kappa = cfg.kappa;
  HermitianMetricField g = eh::metric(kappa);

  // engine vs the explicit chiral formulas
  double minus_err = 0, plus_err = 0, cancel_err = 0;
  for (int t = 0; t < cfg.samples; ++t) {
    ScalarField beta = random_coefficient(rng, 2), gamma = random_coefficient(rng, 2);
    ScalarField alpha = random_coefficient(rng, 2), delta = random_coefficient(rng, 2);
    FormField w(2, 0, 1);
    w.add_term({}, {0}, beta);
    w.add_term({}, {1}, gamma);
    SpinorField Dm = dirac(SpinorField::from_form(w), g);
    SpinorField sp(2);
    sp.part(0).add_term({}, {}, alpha);
    sp.part(2).add_term({}, {0, 1}, delta);
    SpinorField Dp = dirac(sp, g);

    ChartPoint p = sample(rng);
    cplx v = g.det()(p);
    cplx scalar = (g.g(1, 1)(p) * beta.d_z(0)(p) - g.g(1, 0)(p) * gamma.d_z(0)(p) -
                   g.g(0, 1)(p) * beta.d_z(1)(p) + g.g(0, 0)(p) * gamma.d_z(1)(p)) /
                  v;
    cplx top = gamma.d_zbar(0)(p) - beta.d_zbar(1)(p);
    minus_err = std::max(minus_err,
                         std::abs(Dm.part(0).coefficient({}, {})(p) - scalar) +
                             std::abs(Dm.part(2).coefficient({}, {0, 1})(p) - top));
    cplx c1 = alpha.d_zbar(0)(p) -
              (g.g(0, 0)(p) * delta.d_z(1)(p) - g.g(1, 0)(p) * delta.d_z(0)(p)) / v;
    cplx c2 = alpha.d_zbar(1)(p) -
              (g.g(0, 1)(p) * delta.d_z(1)(p) - g.g(1, 1)(p) * delta.d_z(0)(p)) / v;
    plus_err = std::max(plus_err, std::abs(Dp.part(1).coefficient({}, {0})(p) - c1) +
                                      std::abs(Dp.part(1).coefficient({}, {1})(p) - c2));
    cancel_err = std::max({cancel_err, std::abs(g.g(1, 0).d_z(0)(p) - g.g(0, 0).d_z(1)(p)),
                           std::abs(g.g(1, 1).d_z(0)(p) - g.g(0, 1).d_z(1)(p))});
  }
  rep.add("dirac.engine.chiral-minus", "recipe = chiral formula on (0,1) forms", minus_err,
          rep.config.tol("dirac", 1e-10));
  rep.add("dirac.engine.chiral-plus", "recipe = chiral formula on functions + (0,2) forms",
          plus_err, rep.config.tol("dirac", 1e-10));
  rep.add("dirac.engine.kahler-cancellation", "metric-derivative terms cancel", cancel_err, 1e-8);

  // zero-mode residual table
  for (int ell = 1; ell <= cfg.ell_max; ++ell) {
    OneForm A = eh::connection(ell, kappa);
    int normalisable = 0;
    double worst = 0;
    for (int twoN = 0; twoN <= ell + 1; ++twoN)
      for (int twoM = -twoN; twoM <= twoN; twoM += 2) {
        ZeroModeSpec spec = ZeroModeSpec::eh(twoN, twoM, ell, kappa);
        FormField mode = eh_zero_mode(spec);
        SpinorField Ds = twisted_dirac(mode, A, g);
        for (int t = 0; t < std::max(3, cfg.samples / 5); ++t) {
          ChartPoint p = sample(rng);
          double r = std::sqrt(pointwise_norm_sq(Ds, g, p) / pointwise_norm_sq(mode, g, p));
          worst = std::max(worst, r);
        }
        if (classify_eh(twoN, ell) == NormClass::Normalisable) ++normalisable;
      }
    rep.add("dirac.zero-modes.residual.ell=" + std::to_string(ell),
            "twisted Dirac annihilates the closed-form modes", worst,
            rep.config.tol("residual", 1e-8));
    rep.add("dirac.zero-modes.count.ell=" + std::to_string(ell),
            "l(l+1)/2 normalisable modes",
            std::abs(normalisable - ell * (ell + 1) / 2), 0.5,
            std::to_string(normalisable) + " modes");
  }

  // norm formula vs engine pairing
  double norm_err = 0;
  for (int twoN : {0, 1, 2}) {
    ZeroModeSpec spec = ZeroModeSpec::eh(twoN, twoN % 2, std::max(1, cfg.ell_max), kappa);
    FormField mode = eh_zero_mode(spec);
    ScalarField nsq = eh_norm_sq(spec);
    for (int t = 0; t < cfg.samples; ++t) {
      ChartPoint p = sample(rng);
      double engine = pointwise_norm_sq(mode, g, p);
      norm_err = std::max(norm_err, std::abs(engine - nsq(p).real()) / std::max(1.0, engine));
    }
  }
  rep.add("dirac.zero-modes.norm", "closed-form |sigma|^2 = engine pairing", norm_err,
          rep.config.tol("norm", 1e-10));

  // beta modes across dimensions
  double beta_err = 0;
  for (int n : {1, 2, 3}) {
    HermitianMetricField gn = calabi_metric(n, kappa);
    SpinorField Db = dirac(SpinorField::from_form(calabi_beta(n, kappa)), gn);
    PointSampler sn{n + 1};
    for (int t = 0; t < cfg.samples; ++t) beta_err = std::max(beta_err, Db.max_abs(sn(rng)));
  }
  rep.add("dirac.beta.residual", "untwisted mode beta annihilated for n = 1,2,3", beta_err, 1e-9);
}

inline void run_quotient(const RunConfig& cfg, Report& rep) {
  std::mt19937_64 rng(cfg.seed + 3);
  PointSampler sample{2};
  std::uniform_real_distribution<double> ang(0.0, 2.0 * M_PI);
  std::normal_distribution<double> gau(0.0, 1.0);

  double moment_err = 0, square_err = 0, pot_err = 0, equi_err = 0;
  for (double kappa : {0.5, cfg.kappa, 4.0}) {
    HermitianMetricField g = eh::metric(kappa);
    OneForm conn = eh::connection(1, kappa);
    FormField extracted = hk::quotient_potential(kappa);
    for (int t = 0; t < 2 * cfg.samples; ++t) {
      ChartPoint p = sample(rng);
      hk::LevelSetCoords c{p.z[0], p.z[1], ang(rng), kappa};
      auto m = hk::moment_maps(hk::embed(c), kappa);
      moment_err = std::max({moment_err, std::abs(m.mu_r), std::abs(m.mu_c)});

      hk::Tangent5 v{gau(rng), gau(rng), gau(rng), gau(rng), gau(rng)};
      auto d = hk::pullback_check(c, v, g, conn);
      square_err = std::max(square_err, d.error() / std::max(1.0, d.ambient));

      pot_err = std::max(pot_err, (extracted - conn.a).max_abs(p));

      auto su = random_su2(rng);
      auto chk = hk::u2_equivariance(su, c);
      equi_err = std::max({equi_err, chk.moment_error, chk.embed_error});
    }
  }
  rep.add("quotient.moment.residual", "embedded points satisfy both moment constraints",
          moment_err, rep.config.tol("moment", 1e-12));
  rep.add("quotient.metric.split", "flat pullback = EH + fiber term", square_err,
          rep.config.tol("split", 1e-6));
  rep.add("quotient.connection.match", "extracted potential = twisting potential", pot_err,
          rep.config.tol("potential", 1e-10));
  rep.add("quotient.equivariance.su2", "SU(2) action commutes with the embedding", equi_err,
          1e-12);
}

inline void run_l2(const RunConfig& cfg, Report& rep) {
  // analytic angular factors against their defining integrals are unit
  // tested; here the classifier sweep and representative integrals run.
  int disagree = 0, cases = 0;
  for (int ell = 0; ell <= std::max(3, cfg.ell_max); ++ell)
    for (int twoN = 0; twoN <= 6; ++twoN) {
      auto r = l2_integral_eh(ZeroModeSpec::eh(twoN, twoN % 2, ell, cfg.kappa));
      if (to_norm_class(r.tag) != classify_eh(twoN, ell)) ++disagree;
      ++cases;
    }
  rep.add("l2.classifier.eh", "quadrature finiteness = analytic window", double(disagree), 0.5,
          std::to_string(cases) + " cases");

  int gen_disagree = 0, gen_cases = 0;
  for (int ell = 0; ell <= 2; ++ell)
    for (int delta = 0; delta <= 3; ++delta) {
      std::vector<int> exps(cfg.n + 1, 0);
      exps[0] = delta;
      auto r = l2_integral_general(ZeroModeSpec::general(cfg.n, exps, ell, cfg.kappa));
      if (to_norm_class(r.tag) != classify_general(delta, ell, cfg.n)) ++gen_disagree;
      ++gen_cases;
    }
  rep.add("l2.classifier.general", "quadrature finiteness = analytic window",
          double(gen_disagree), 0.5, std::to_string(gen_cases) + " cases");

  auto fin = l2_integral_eh(ZeroModeSpec::eh(0, 0, 1, cfg.kappa));
  rep.add("l2.integral.singlet", "singlet mode norm finite",
          fin.tag == IntegralTag::Finite ? 0.0 : 1.0, 0.5,
          "value " + format_double(fin.value));

  auto omt = l2_norm_form(eh::l2_form(cfg.kappa), eh::metric(cfg.kappa), 1, 0.0, -4.0);
  rep.add("l2.form.l2-norm", "harmonic 2-form has finite norm",
          omt.tag == IntegralTag::Finite ? 0.0 : 1.0, 0.5, "value " + format_double(omt.value));

  auto beta = l2_norm_form(calabi_beta(1, cfg.kappa), calabi_metric(1, cfg.kappa), 1, -2.0, -3.0);
  rep.add("l2.form.beta-log", "beta norm log-divergent at the origin",
          beta.tag == IntegralTag::LogDivergent ? 0.0 : 1.0, 0.5);
}

inline void run_flux(const RunConfig& cfg, Report& rep) {
  double worst = 0;
  for (int ell = 0; ell <= cfg.ell_max; ++ell) {
    auto f = flux(FluxTask{1, ell, cfg.kappa});
    worst = std::max(worst, std::abs(f.value - double(ell)));
  }
  rep.add("flux.quantisation.n=1", "flux = l over the generator cycle", worst,
          rep.config.tol("flux", 1e-6));

  auto f2 = flux(FluxTask{cfg.n, cfg.ell_max, cfg.kappa});
  rep.add("flux.quantisation.n=" + std::to_string(cfg.n), "flux = l over the generator cycle",
          std::abs(f2.value - double(cfg.ell_max)), rep.config.tol("flux", 1e-6),
          "value " + format_double(f2.value));

  double kinv = 0;
  for (double kappa : {0.5, 1.0, 3.0, 7.0})
    kinv = std::max(kinv, std::abs(flux(FluxTask{1, 1, kappa}).value - 1.0));
  rep.add("flux.kappa-invariance", "flux independent of kappa", kinv, 1e-6);
}

inline Report run(const RunConfig& cfg) {
  cfg.validate();
  Report rep;
  rep.config = cfg;
  Suite s = cfg.suite;
  if (s == Suite::eh || s == Suite::all) run_eh(cfg, rep);
  if (s == Suite::calabi || s == Suite::all) run_calabi(cfg, rep);
  if (s == Suite::dirac || s == Suite::all) run_dirac(cfg, rep);
  if (s == Suite::quotient || s == Suite::all) run_quotient(cfg, rep);
  if (s == Suite::l2 || s == Suite::all) run_l2(cfg, rep);
  if (s == Suite::flux || s == Suite::all) run_flux(cfg, rep);
  return rep;
}

}  // namespace suites
}  // namespace spinc
