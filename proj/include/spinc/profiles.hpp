#pragma once

#include <limits>
#include <random>
#include <sstream>
#include <string>

#include "spinc/l2_analysis.hpp"
#include "spinc/report.hpp"
#include "spinc/sampling.hpp"

namespace spinc {

/// Plot-ready CSV tables over an s-grid, shared by the dump tool and
/// the tests that pin their qualitative shape.

struct ProfileGrid {
  double a = 0.1, b = 20.0;
  int k = 400;
};

inline std::string eh_profile_csv(const ProfileGrid& grid, double kappa) {
  HermitianMetricField g = eh::metric(kappa);
  FormField omt = eh::l2_form(kappa);
  OneForm th = eh::theta3(kappa);
  std::ostringstream out;
  out << "s,F,f,omega_tilde_sq,theta3_sq\n";
  for (int i = 0; i < grid.k; ++i) {
    double s = grid.a + (grid.b - grid.a) * i / (grid.k - 1);
    ChartPoint p{cplx(std::sqrt(s), 0.0), cplx(0.0)};
    double t3 = pointwise_norm_sq(th.h, g, p) + pointwise_norm_sq(th.a, g, p);
    out << format_double(s) << ',' << format_double(eh::F_of(s, kappa)) << ','
        << format_double(eh::f_of(s, kappa)) << ','
        << format_double(pointwise_norm_sq(omt, g, p)) << ',' << format_double(t3) << '\n';
  }
  return out.str();
}

inline std::string calabi_profile_csv(const ProfileGrid& grid, int n, double kappa) {
  HermitianMetricField g = calabi_metric(n, kappa);
  FormField beta = calabi_beta(n, kappa);
  FormField omt = calabi_l2_form(n, kappa);
  std::ostringstream out;
  out << "s,F,beta_sq,omega_tilde_sq\n";
  for (int i = 0; i < grid.k; ++i) {
    double s = grid.a + (grid.b - grid.a) * i / (grid.k - 1);
    ChartPoint p;
    p.z.assign(n + 1, cplx(0.0));
    p.z[0] = cplx(std::sqrt(s), 0.0);
    out << format_double(s) << ',' << format_double(calabi_F_of(s, n, kappa)) << ','
        << format_double(pointwise_norm_sq(beta, g, p)) << ','
        << format_double(pointwise_norm_sq(omt, g, p)) << '\n';
  }
  return out.str();
}

inline std::string mode_profile_csv(const ProfileGrid& grid, int twoN, int twoM, int ell,
                                    double kappa) {
  ZeroModeSpec spec = ZeroModeSpec::eh(twoN, twoM, ell, kappa);
  ScalarField nsq = eh_norm_sq(spec);
  std::ostringstream out;
  out << "s,F,f,sigma_sq\n";
  std::mt19937_64 rng(11);
  PointSampler sample{2};
  for (int i = 0; i < grid.k; ++i) {
    double s = grid.a + (grid.b - grid.a) * i / (grid.k - 1);
    ChartPoint p = sample.at_s(rng, s);
    out << format_double(s) << ',' << format_double(eh::F_of(s, kappa)) << ','
        << format_double(eh::f_of(s, kappa)) << ',' << format_double(nsq(p).real()) << '\n';
  }
  return out.str();
}

/// Zero-mode classification table. Column two holds 2N for n = 1 and the
/// polynomial degree delta for n > 1 (where the residual sweep uses the
/// representative monomial z_1^delta).
inline std::string mode_table_csv(int n, int ell_max, double kappa) {
  HermitianMetricField g = calabi_metric(n, kappa);
  std::mt19937_64 rng(11);
  PointSampler sample{n + 1};
  std::ostringstream out;
  out << "n,twoN_or_delta,twoM,ell,kappa,class,residual_max,l2_norm_or_nan\n";
  auto emit = [&](const ZeroModeSpec& spec, const FormField& mode, const OneForm& A, int twoM) {
    SpinorField Ds = twisted_dirac(mode, A, g);
    double worst = 0.0;
    for (int t = 0; t < 5; ++t) {
      ChartPoint p = sample(rng);
      worst = std::max(worst,
                       std::sqrt(pointwise_norm_sq(Ds, g, p) / pointwise_norm_sq(mode, g, p)));
    }
    NormClass cls = n == 1 ? classify_eh(spec.twoN, spec.ell)
                           : classify_general(spec.delta(), spec.ell, n);
    L2Result l2 = n == 1 ? l2_integral_eh(spec) : l2_integral_general(spec);
    double value =
        l2.tag == IntegralTag::Finite ? l2.value : std::numeric_limits<double>::quiet_NaN();
    out << n << ',' << spec.delta() << ',' << twoM << ',' << spec.ell << ','
        << format_double(kappa) << ',' << to_string(cls) << ',' << format_double(worst) << ','
        << format_double(value) << '\n';
  };
  for (int ell = 0; ell <= ell_max; ++ell) {
    OneForm A = calabi_connection(n, ell, kappa);
    for (int delta = 0; delta <= ell + 1; ++delta) {
      if (n == 1) {
        for (int twoM = -delta; twoM <= delta; twoM += 2) {
          ZeroModeSpec spec = ZeroModeSpec::eh(delta, twoM, ell, kappa);
          emit(spec, eh_zero_mode(spec), A, twoM);
        }
      } else {
        std::vector<int> exps(n + 1, 0);
        exps[0] = delta;
        ZeroModeSpec spec = ZeroModeSpec::general(n, exps, ell, kappa);
        emit(spec, general_zero_mode(spec), A, 0);
      }
    }
  }
  return out.str();
}

/// Quadrature results for the classification sweep:
/// one row per mode with the finiteness tag and the error estimate.
inline std::string l2_table_csv(int n, int ell_max, double kappa) {
  std::ostringstream out;
  out << "n,twoN_or_delta,ell,kappa,tag,value,error_estimate\n";
  for (int ell = 0; ell <= ell_max; ++ell)
    for (int delta = 0; delta <= ell + 2; ++delta) {
      ZeroModeSpec spec =
          n == 1 ? ZeroModeSpec::eh(delta, delta % 2, ell, kappa)
                 : ZeroModeSpec::general(n,
                                         [&] {
                                           std::vector<int> e(n + 1, 0);
                                           e[0] = delta;
                                           return e;
                                         }(),
                                         ell, kappa);
      L2Result r = n == 1 ? l2_integral_eh(spec) : l2_integral_general(spec);
      out << n << ',' << delta << ',' << ell << ',' << format_double(kappa) << ','
          << to_string(r.tag) << ',' << format_double(r.value) << ','
          << format_double(r.error) << '\n';
    }
  return out.str();
}

}  // namespace spinc
