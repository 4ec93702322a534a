#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinc/calabi.hpp"
#include "spinc/quadrature.hpp"
#include "spinc/zero_modes.hpp"

namespace spinc {

// ---------------------------------------------------------------------
// Angular reductions. Unit-sphere averages of |z_1|^{2k_1}...|z_d|^{2k_d}
// over S^{2d-1}: prod(k_i!) (d-1)! / (d-1+sum k_i)!.

// a! b! / (a+b+1)!, assembled as a product of ratios to avoid overflow.
inline double angular_average(int a, int b) {
  if (a < 0 || b < 0) throw std::invalid_argument("exponents must be nonnegative");
  double r = 1.0;
  for (int i = 1; i <= b; ++i) r *= double(i) / double(a + i);
  return r / double(a + b + 1);
}

inline double angular_average_general(const std::vector<int>& exponents) {
  int d = static_cast<int>(exponents.size());
  if (d < 1) throw std::invalid_argument("need at least one exponent");
  int total = 0;
  for (int k : exponents) {
    if (k < 0) throw std::invalid_argument("exponents must be nonnegative");
    total += k;
  }
  // prod k_i! (d-1)! / (d-1+total)!
  double val = 1.0;
  for (int k : exponents)
    for (int i = 1; i <= k; ++i) val *= i;
  for (int i = 1; i <= d - 1; ++i) val *= i;
  for (int i = 1; i <= d - 1 + total; ++i) val /= i;
  return val;
}

inline double sphere_volume(int d) {  // area of S^{2d-1}
  double v = 2.0;
  for (int i = 1; i <= d; ++i) v *= M_PI;
  for (int i = 1; i <= d - 1; ++i) v /= i;
  return v;
}

// ---------------------------------------------------------------------
// Radial integrals with divergence detection at s -> 0.

struct RadialIntegrand {
  std::function<double(double)> profile;  // integrand in s, positive
  double small_s_exponent = 0.0;          // profile ~ s^e near 0
  double large_s_exponent = -2.0;         // profile ~ s^e at infinity (power tail)
  bool exponential_tail = false;
};

enum class IntegralTag { Finite, LogDivergent, PowerDivergent, NonConvergent };

inline std::string to_string(IntegralTag t) {
  switch (t) {
    case IntegralTag::Finite: return "finite";
    case IntegralTag::LogDivergent: return "log-divergent";
    case IntegralTag::PowerDivergent: return "power-divergent";
    default: return "non-convergent";
  }
}

struct L2Result {
  IntegralTag tag = IntegralTag::NonConvergent;
  double value = 0.0;
  double error = 0.0;
};

/// Integrates profile over [eps, S_max] for the cutoff ladder
/// eps_k = 10^{-k}, k = 1..6, then selects among {const, log(1/eps),
/// eps^{-p}} by least squares on I(eps_k). The tail beyond S_max comes
/// from the declared large-s behaviour.
inline L2Result radial_integral(const RadialIntegrand& f, double s_max = 1e4,
                                double abs_tol = 1e-9, double rel_tol = 1e-8) {
  std::vector<double> eps, I;
  bool quad_ok = true;
  double tail = 0.0;
  if (f.exponential_tail) {
    tail = 0.0;
  } else {
    double p = -f.large_s_exponent;
    if (p <= 1.0) return {IntegralTag::NonConvergent, 0.0, 0.0};
    tail = f.profile(s_max) * s_max / (p - 1.0);
  }
  double acc = 0.0, accerr = 0.0, upper = s_max;
  for (int k = 1; k <= 6; ++k) {
    double e = std::pow(10.0, -k);
    QuadResult q = integrate(f.profile, e, upper, abs_tol, rel_tol);
    quad_ok = quad_ok && q.converged;
    acc += q.value;
    accerr += q.error;
    eps.push_back(e);
    I.push_back(acc + tail);
    upper = e;
  }
  if (!quad_ok) return {IntegralTag::NonConvergent, I.back(), accerr};

  // increments of shrinking the cutoff by one decade
  std::array<double, 5> d;
  for (int k = 1; k <= 5; ++k) d[k - 1] = I[k] - I[k - 1];
  double span = std::max({std::abs(I.back()), std::abs(tail), 1e-12});

  // fully converged ladder
  if (std::abs(d[4]) <= std::max(1e-10, 1e-9 * span) &&
      std::abs(d[3]) <= std::max(1e-9, 1e-8 * span))
    return {IntegralTag::Finite, I[5], accerr + std::abs(d[4])};

  // geometric ratio of the last increments decides the model: shrinking
  // decades mean a convergent tail, equal decades the log model, growing
  // decades the power model eps^{-p} with p = log10(ratio).
  double ratio = 0.0;
  int cnt = 0;
  for (int k = 2; k < 5; ++k)
    if (d[k - 1] != 0.0 && d[k] / d[k - 1] > 0.0) {
      ratio += std::log10(d[k] / d[k - 1]);
      ++cnt;
    }
  if (cnt == 0) return {IntegralTag::Finite, I[5], accerr + std::abs(d[4])};
  ratio = std::pow(10.0, ratio / cnt);

  if (ratio <= 0.5) {
    // sum the geometric tail of the remaining decades
    double corr = d[4] * ratio / (1.0 - ratio);
    return {IntegralTag::Finite, I[5] + corr, accerr + std::abs(corr)};
  }

  // least-squares adjudication between the log and power models
  auto fit_ssr = [&](const std::vector<double>& basis) {
    double sx = 0, sxx = 0, sy = 0, sxy = 0;
    int m = static_cast<int>(basis.size());
    for (int i = 0; i < m; ++i) {
      sx += basis[i];
      sxx += basis[i] * basis[i];
      sy += I[i];
      sxy += basis[i] * I[i];
    }
    double det = m * sxx - sx * sx;
    double b = (m * sxy - sx * sy) / det;
    double a = (sy - b * sx) / m;
    double ssr = 0;
    for (int i = 0; i < m; ++i) {
      double r = I[i] - a - b * basis[i];
      ssr += r * r;
    }
    return ssr;
  };
  double phat = std::max(0.05, std::log10(ratio));
  std::vector<double> xlog, xpow;
  for (double e : eps) {
    xlog.push_back(std::log(1.0 / e));
    xpow.push_back(std::pow(e, -phat));
  }
  if (fit_ssr(xlog) <= fit_ssr(xpow)) return {IntegralTag::LogDivergent, I.back(), accerr};
  return {IntegralTag::PowerDivergent, I.back(), accerr};
}

inline NormClass to_norm_class(IntegralTag t) {
  switch (t) {
    case IntegralTag::Finite: return NormClass::Normalisable;
    case IntegralTag::LogDivergent: return NormClass::LogDivergent;
    case IntegralTag::PowerDivergent: return NormClass::PowerDivergentAtZero;
    default: return NormClass::DivergentAtInfinity;
  }
}

/// Declared asymptotics against measured log-log slopes, the sanity
/// check every radial integrand must survive before its tags are
/// believed.
struct ExponentCheck {
  double small_declared, small_measured;
  double large_declared, large_measured;
  bool ok(double rel = 0.05) const {
    auto close = [rel](double a, double b) {
      return std::abs(a - b) <= rel * std::max(1.0, std::abs(a));
    };
    return close(small_declared, small_measured) &&
           (std::isnan(large_declared) || close(large_declared, large_measured));
  }
};

inline ExponentCheck check_exponents(const RadialIntegrand& f) {
  auto slope = [&f](double s0) {
    return std::log(f.profile(2.0 * s0) / f.profile(s0)) / std::log(2.0);
  };
  ExponentCheck c;
  c.small_declared = f.small_s_exponent;
  c.small_measured = slope(1e-6);
  c.large_declared = f.exponential_tail ? std::nan("") : f.large_s_exponent;
  c.large_measured = slope(1e6);
  return c;
}

/// The full-space L^2 density of an n = 1 zero mode reduced to s: the
/// angular monomial average times pi^2 s^{-2N-2} / (F f^l), the measure
/// already folded in (det g = 1).
inline RadialIntegrand eh_mode_integrand(const ZeroModeSpec& spec) {
  spec.validate();
  if (spec.n != 1) throw std::invalid_argument("eh_mode_integrand needs n = 1");
  int a = (spec.twoN - spec.twoM) / 2, b = (spec.twoN + spec.twoM) / 2;
  double kappa = spec.kappa;
  int twoN = spec.twoN, ell = spec.ell;
  double norm = M_PI * M_PI * angular_average(a, b);
  RadialIntegrand f;
  f.profile = [twoN, ell, kappa, norm](double s) {
    double F = eh::F_of(s, kappa);
    double fl = std::pow(eh::f_of(s, kappa), ell);
    return norm * std::pow(s, -twoN - 2) / (F * fl);
  };
  f.small_s_exponent = kappa > 0.0 ? double(ell - twoN - 1) : double(-twoN - 2);
  f.large_s_exponent = double(-twoN - 2);
  return f;
}

inline L2Result l2_integral_eh(const ZeroModeSpec& spec) {
  return radial_integral(eh_mode_integrand(spec));
}

/// Same reduction for general n: (Vol(S^{2n+1})/2) avg times
/// f_n^2 / (F^n s^{delta+n+1}).
inline RadialIntegrand general_mode_integrand(const ZeroModeSpec& spec) {
  spec.validate();
  int n = spec.n;
  int delta = spec.delta();
  double kappa = spec.kappa;
  int ell = spec.ell;
  std::vector<int> exps = spec.exponents;
  if (n == 1) exps = {(spec.twoN - spec.twoM) / 2, (spec.twoN + spec.twoM) / 2};
  double norm = 0.5 * sphere_volume(n + 1) * angular_average_general(exps);

  // one shared quadrature-backed profile, the same object the mode uses
  ScalarField fnf = fn_profile(n, ell, kappa);
  ChartPoint probe;  // evaluate the radial node on the axis point (sqrt(s), 0, ..)
  probe.z.assign(n + 1, cplx(0.0));
  auto fn_val = [fnf, probe](double s) mutable {
    probe.z[0] = cplx(std::sqrt(s), 0.0);
    return fnf(probe).real();
  };

  RadialIntegrand f;
  f.profile = [n, delta, kappa, norm, fn_val](double s) mutable {
    double F = calabi_F_of(s, n, kappa);
    double fn = fn_val(s);
    return norm * fn * fn / (std::pow(F, n) * std::pow(s, delta + n + 1));
  };
  f.small_s_exponent = kappa > 0.0 ? double(ell - delta - 1) : double(-delta - n - 1);
  f.large_s_exponent = double(-delta - n - 1);
  return f;
}

inline L2Result l2_integral_general(const ZeroModeSpec& spec) {
  return radial_integral(general_mode_integrand(spec));
}

/// Total L^2 norm of a U(n+1)-invariant form: (Vol/2) int s^n |w|^2(s) ds
/// with |w|^2 sampled on the coordinate axis.
inline L2Result l2_norm_form(const FormField& w, const HermitianMetricField& g, int n,
                             double small_s_exponent, double large_s_exponent) {
  RadialIntegrand f;
  double norm = 0.5 * sphere_volume(n + 1);
  f.profile = [w, g, n, norm](double s) {
    ChartPoint p;
    p.z.assign(n + 1, cplx(0.0));
    p.z[0] = cplx(std::sqrt(s), 0.0);
    return norm * std::pow(s, n) * pointwise_norm_sq(w, g, p);
  };
  f.small_s_exponent = small_s_exponent + n;
  f.large_s_exponent = large_s_exponent + n;
  return radial_integral(f);
}

// ---------------------------------------------------------------------
// Flux quantization. The generator 2-cycle is the zero-section sphere
// {zeta = 0, w_2 = ... = w_n = 0}; it is not visible in z-coordinates,
// so the curvature is restricted through the base connection
//   alpha = i (n+1) Im(wbar dw) / (1 + |w|^2),
// with d A_l |_Sigma = l kappa^{n/(n+1)} * [2i d alpha / ((n+1) kappa^{n/(n+1)})] * (-i/2).

struct FluxTask {
  int n;
  int ell;
  double kappa;
};

inline OneForm base_connection_form(int n) {
  int dim = 1;
  ScalarField w = ScalarField::coordinate(0, dim);
  ScalarField wb = ScalarField::coordinate_bar(0, dim);
  ScalarField den = ScalarField::constant(1.0) + w * wb;
  ScalarField c = ScalarField::constant(0.5 * double(n + 1));
  FormField h(dim, 1, 0), a(dim, 0, 1);
  h.add_term({0}, {}, c * wb / den);
  a.add_term({}, {0}, -(c * w / den));
  return OneForm(h, a);
}

/// (1/(2 pi i)) of the integral of d(u) over the w-plane, by an angular
/// trapezoid rule times adaptive radial quadrature (the radial variable
/// compactified by r = t/(1-t)).
inline QuadResult flux_of_base_form(const OneForm& u, double abs_tol = 1e-9) {
  TwoFormPieces du = one_form_derivative(u);
  const int n_ang = 48;
  auto radial = [&](double t) {
    double r = t / (1.0 - t);
    double jac = 1.0 / ((1.0 - t) * (1.0 - t));
    cplx acc(0.0);
    for (int k = 0; k < n_ang; ++k) {
      double th = 2.0 * M_PI * k / n_ang;
      ChartPoint p{cplx(r * std::cos(th), r * std::sin(th))};
      std::vector<cplx> ex{cplx(1.0, 0.0)}, ey{cplx(0.0, 1.0)};
      cplx v = eval_two_form(du.f11, p, ex, ey);
      if (!du.f20.zero()) v += eval_two_form(du.f20, p, ex, ey);
      if (!du.f02.zero()) v += eval_two_form(du.f02, p, ex, ey);
      acc += v;
    }
    // mean over angles * circumference measure r dr
    cplx val = acc * (2.0 * M_PI / n_ang) * r * jac;
    // the curvature of an imaginary connection is imaginary: 1/(2 pi i)
    // of an imaginary value is its imaginary part over 2 pi
    return val.imag() / (2.0 * M_PI);
  };
  return integrate(radial, 0.0, 1.0 - 1e-9, abs_tol, 1e-9);
}

/// Flux of the twisting curvature through the generator cycle; equals
/// the integer l by construction.
inline QuadResult flux(const FluxTask& task) {
  if (!(task.kappa > 0.0)) throw std::invalid_argument("flux needs kappa > 0");
  CalabiParams{task.n, task.kappa}.validate();
  double kpow = std::pow(task.kappa, double(task.n) / double(task.n + 1));
  // d A_l = -(i/2) l kpow * l2_form, and on the cycle the l2 form is
  // 2i d alpha / ((n+1) kpow); the chain collapses to l/(n+1) d alpha.
  cplx chain = cplx(0.0, -0.5) * double(task.ell) * kpow * cplx(0.0, 2.0) /
               (double(task.n + 1) * kpow);
  OneForm alpha = base_connection_form(task.n);
  OneForm restricted = chain * alpha;
  return flux_of_base_form(restricted);
}

}  // namespace spinc
