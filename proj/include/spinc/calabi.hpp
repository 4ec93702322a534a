#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinc/dirac.hpp"
#include "spinc/form.hpp"
#include "spinc/metric.hpp"
#include "spinc/scalar_field.hpp"

namespace spinc {

/// Ricci-flat Kaehler metrics on the total space of O(-n-1) over CP^n in
/// the symmetric coordinates z_1..z_{n+1}:
///   g_{mu nubar} = F' zbar_mu z_nu + F delta_{mu nu},
///   F(s) = (1 + kappa/s^{n+1})^{1/(n+1)},  det g = 1.
struct CalabiParams {
  int n;
  double kappa;

  void validate() const {
    if (n < 1 || n > 8) throw std::invalid_argument("base dimension n must be in [1,8]");
    if (!(kappa >= 0.0)) throw std::invalid_argument("kappa must be nonnegative");
  }
  int dim() const { return n + 1; }
};

inline ScalarField calabi_F(int n, double kappa) {
  int dim = n + 1;
  ScalarField s = ScalarField::radius_sq(dim);
  return pow_real(ScalarField::constant(1.0) + kappa * pow_int(s, -(n + 1)), 1.0 / (n + 1));
}

// F' = (F^{-n} - F)/s, exact for this profile.
inline ScalarField calabi_Fprime(int n, double kappa) {
  ScalarField F = calabi_F(n, kappa);
  ScalarField s = ScalarField::radius_sq(n + 1);
  return (pow_int(F, -n) - F) / s;
}

// Plain radial versions for quadrature work.
inline double calabi_F_of(double s, int n, double kappa) {
  return std::pow(1.0 + kappa / std::pow(s, n + 1), 1.0 / (n + 1));
}

// sum_nu z_nu dzbar_nu, the (0,1) leg every radial object is built on.
inline FormField z_dzbar(int dim) {
  FormField w(dim, 0, 1);
  for (int nu = 0; nu < dim; ++nu) w.add_term({}, {nu}, ScalarField::coordinate(nu, dim));
  return w;
}
inline FormField zbar_dz(int dim) { return conj(z_dzbar(dim)); }

inline HermitianMetricField calabi_metric(const CalabiParams& prm) {
  prm.validate();
  int dim = prm.dim();
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = calabi_F(prm.n, prm.kappa);
  ScalarField Fp = calabi_Fprime(prm.n, prm.kappa);

  std::vector<ScalarField> g, ginv;
  g.reserve(dim * dim);
  ginv.reserve(dim * dim);
  // inverse: g^{mu nubar} = delta/F + kappa zbar_mu z_nu / (s^{n+2} F)
  ScalarField inv_off = ScalarField::constant(prm.kappa) / (pow_int(s, prm.n + 2) * F);
  for (int mu = 0; mu < dim; ++mu)
    for (int nu = 0; nu < dim; ++nu) {
      ScalarField zm_bar = ScalarField::coordinate_bar(mu, dim);
      ScalarField zn = ScalarField::coordinate(nu, dim);
      ScalarField gmn = Fp * zm_bar * zn;
      ScalarField imn = inv_off * zm_bar * zn;
      if (mu == nu) {
        gmn = gmn + F;
        imn = imn + pow_int(F, -1);
      }
      g.push_back(gmn);
      ginv.push_back(imn);
    }
  return HermitianMetricField(dim, std::move(g), std::move(ginv), ScalarField::constant(1.0));
}

inline HermitianMetricField calabi_metric(int n, double kappa) {
  return calabi_metric(CalabiParams{n, kappa});
}

/// Kaehler form written through its potential, omega = 2i d(F z dzbar);
/// only the (1,1) piece is returned (the (0,2) piece of the derivative
/// cancels identically).
inline FormField calabi_kahler_form(int n, double kappa) {
  CalabiParams{n, kappa}.validate();
  int dim = n + 1;
  FormField pot = calabi_F(n, kappa) * z_dzbar(dim);
  return cplx(0.0, 2.0) * exterior_derivative(pot).holo;
}

/// The untwisted zero mode beta = z dzbar / (s^{n+1} F^n); its exterior
/// derivative generates the L^2 harmonic 2-forms.
inline FormField calabi_beta(int n, double kappa) {
  CalabiParams prm{n, kappa};
  prm.validate();
  int dim = prm.dim();
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField chi = pow_int(s, -(n + 1)) * pow_int(calabi_F(n, kappa), -n);
  return chi * z_dzbar(dim);
}

inline FormField calabi_l2_form(int n, double kappa) {
  if (!(kappa > 0.0)) throw std::invalid_argument("the L2 form degenerates at kappa = 0");
  return cplx(0.0, 2.0) * exterior_derivative(calabi_beta(n, kappa)).holo;
}

/// Twisting connection A_l = l (A - Abar) with
/// A = kappa^{n/(n+1)} z dzbar / (2 s^{n+1} F^n); purely imaginary, and
/// d(A_l) is the unique L^2 harmonic 2-form normalised to flux l.
inline OneForm calabi_connection(int n, int ell, double kappa) {
  CalabiParams{n, kappa}.validate();  // kappa = 0 yields the zero form
  double cn = std::pow(kappa, double(n) / double(n + 1)) / 2.0;
  FormField A = (cn * double(ell)) * calabi_beta(n, kappa);
  FormField Abar = conj(A);
  return OneForm(-Abar, A);
}

/// Metric dual of the fibre rotation field, xi_flat = i (z dzbar - zbar dz) / (2 F^n).
/// Satisfies 2 d(xi_flat) = omega - kappa * l2_form.
inline OneForm calabi_killing_dual(int n, double kappa) {
  CalabiParams{n, kappa}.validate();
  int dim = n + 1;
  ScalarField half_i_Fn = ScalarField::constant(cplx(0.0, 0.5)) * pow_int(calabi_F(n, kappa), -n);
  FormField a01 = half_i_Fn * z_dzbar(dim);
  FormField h10 = -(half_i_Fn * zbar_dz(dim));
  return OneForm(h10, a01);
}

// Both graded pieces of d applied to a complex 1-form.
struct TwoFormPieces {
  FormField f20, f11, f02;
};

inline TwoFormPieces one_form_derivative(const OneForm& u) {
  FormDerivative dh = exterior_derivative(u.h);
  FormDerivative da = exterior_derivative(u.a);
  return TwoFormPieces{dh.holo, dh.anti + da.holo, da.anti};
}

/// Worst pointwise violation of
///   omega - kappa omegaTilde = 2i d(z dzbar / F^n) = 2 d xi_flat
/// over a seeded sample sweep.
struct IdentityCheck {
  double max_err = 0.0;
  int samples = 0;
  bool pass(double tol) const { return max_err < tol; }
};

template <typename SampleFn>
IdentityCheck killing_identity(int n, double kappa, int samples, SampleFn&& sample_point) {
  int dim = n + 1;
  FormField lhs = calabi_kahler_form(n, kappa) - kappa * calabi_l2_form(n, kappa);
  FormField pot = pow_int(calabi_F(n, kappa), -n) * z_dzbar(dim);
  FormField rhs = cplx(0.0, 2.0) * exterior_derivative(pot).holo;
  TwoFormPieces dxi = one_form_derivative(calabi_killing_dual(n, kappa));
  IdentityCheck chk;
  chk.samples = samples;
  for (int t = 0; t < samples; ++t) {
    ChartPoint p = sample_point();
    chk.max_err = std::max({chk.max_err, (lhs - rhs).max_abs(p),
                            (2.0 * dxi.f11 - lhs).max_abs(p),
                            dxi.f20.max_abs(p) + dxi.f02.max_abs(p)});
  }
  return chk;
}

}  // namespace spinc
