#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "spinc/dirac.hpp"
#include "spinc/eh.hpp"

namespace spinc {
namespace hk {

// Flat C^4 = H^2 with the right U(1) action (Z, W) -> (e^{it} Z, e^{-it} W).
// The zero set of the moment maps, quotiented by that circle, carries the
// Eguchi-Hanson metric; the level set itself is the circle bundle whose
// connection is the L^2-curvature twisting form.

struct AmbientPoint {
  std::array<cplx, 2> Z;
  std::array<cplx, 2> W;
};

struct MomentValues {
  double mu_r;
  cplx mu_c;
};

inline MomentValues moment_maps(const AmbientPoint& p, double kappa) {
  double zz = std::norm(p.Z[0]) + std::norm(p.Z[1]);
  double ww = std::norm(p.W[0]) + std::norm(p.W[1]);
  return {zz - ww - 2.0 * std::sqrt(kappa), p.Z[0] * p.W[0] + p.Z[1] * p.W[1]};
}

struct LevelSetCoords {
  cplx z1, z2;
  double psi;
  double kappa;

  double s() const { return std::norm(z1) + std::norm(z2); }
  void validate() const {
    if (!(s() > 0.0)) throw std::invalid_argument("level-set coordinates need s > 0");
    if (!(kappa >= 0.0)) throw std::invalid_argument("kappa must be nonnegative");
  }
};

/// Z = z e^{i psi} f^{1/2}, W = (-z_2, z_1) e^{-i psi} f^{-1/2}; lands on
/// the joint zero set of both moment maps because s (f - 1/f) = 2 sqrt(kappa).
inline AmbientPoint embed(const LevelSetCoords& c) {
  c.validate();
  double f = eh::f_of(c.s(), c.kappa);
  cplx up = std::exp(cplx(0.0, c.psi)) * std::sqrt(f);
  cplx dn = std::exp(cplx(0.0, -c.psi)) / std::sqrt(f);
  return {{c.z1 * up, c.z2 * up}, {-c.z2 * dn, c.z1 * dn}};
}

// Real tangent (dx1, dy1, dx2, dy2, dpsi) for the level-set chart.
using Tangent5 = std::array<double, 5>;

inline LevelSetCoords displaced(const LevelSetCoords& c, const Tangent5& v, double t) {
  LevelSetCoords out = c;
  out.z1 += t * cplx(v[0], v[1]);
  out.z2 += t * cplx(v[2], v[3]);
  out.psi += t * v[4];
  return out;
}

/// Half the flat quadratic form of the pushforward of v through the
/// embedding, by central finite differences with step h.
inline double ambient_qform_fd(const LevelSetCoords& c, const Tangent5& v, double h = 1e-6) {
  AmbientPoint plus = embed(displaced(c, v, h));
  AmbientPoint minus = embed(displaced(c, v, -h));
  double acc = 0.0;
  for (int i = 0; i < 2; ++i) {
    acc += std::norm((plus.Z[i] - minus.Z[i]) / (2.0 * h));
    acc += std::norm((plus.W[i] - minus.W[i]) / (2.0 * h));
  }
  return 0.5 * acc;
}

/// The connection extracted by completing the square in the pulled-back
/// flat metric: A = -(1/2) (log f)'(s) zbar-leg, i.e. the (0,1) form
/// sqrt(kappa) z dzbar / (2 s^2 F). Identical, coefficient by
/// coefficient, to the twisting potential used for the Dirac operator.
inline FormField quotient_potential(double kappa) {
  int dim = 2;
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField f = eh::profile_f(kappa);
  ScalarField logf_prime = ScalarField::constant(0.0);
  for (int mu = 0; mu < dim; ++mu)
    logf_prime = logf_prime + ScalarField::coordinate(mu, dim) * f.d_z(mu) / f;
  logf_prime = logf_prime / s;  // (log f)'(s)
  return (ScalarField::constant(-0.5) * logf_prime) * z_dzbar(dim);
}

struct Decomposition {
  double ambient;    // pullback of half the flat metric, by FD
  double eh_part;    // g_EH on the z-projection of the tangent
  double fiber_part; // s F (dpsi + i(A - Abar)(v))^2
  double error() const { return std::abs(ambient - eh_part - fiber_part); }
};

/// Evaluates both sides of the completed-square identity
///   (1/2)|d embed(v)|^2 = g_EH(v_z, v_z) + s F (dpsi(v) + i(A-Abar)(v))^2.
inline Decomposition pullback_check(const LevelSetCoords& c, const Tangent5& v,
                                    const HermitianMetricField& g_eh, const OneForm& unit_conn,
                                    double h = 1e-6) {
  ChartPoint p{c.z1, c.z2};
  std::vector<cplx> vz{cplx(v[0], v[1]), cplx(v[2], v[3])};
  double s = c.s();
  double F = eh::F_of(s, c.kappa);

  // i(A - Abar)(X) = -2 Im A(X) for the (0,1) potential A
  cplx Av = eval_one_form(unit_conn.a, p, vz);
  double shift = -2.0 * Av.imag();

  Decomposition d;
  d.ambient = ambient_qform_fd(c, v, h);
  d.eh_part = g_eh.qform(p, vz);
  d.fiber_part = s * F * (v[4] + shift) * (v[4] + shift);
  return d;
}

struct EquivarianceCheck {
  double moment_error;   // |mu(h.p) - mu(p)|
  double embed_error;    // |embed(h z) - (h Z, det(h) hbar W)|
};

/// The ambient U(2) action (Z, W) -> (h Z, hbar W) preserves the moment
/// maps; on embedded points it realises z -> h z up to the det(h) phase
/// on the W block (a pure right-circle rotation when h is special).
inline EquivarianceCheck u2_equivariance(const std::vector<std::vector<cplx>>& h,
                                         const LevelSetCoords& c) {
  AmbientPoint p = embed(c);
  cplx det = h[0][0] * h[1][1] - h[0][1] * h[1][0];

  AmbientPoint acted{{h[0][0] * p.Z[0] + h[0][1] * p.Z[1], h[1][0] * p.Z[0] + h[1][1] * p.Z[1]},
                     {std::conj(h[0][0]) * p.W[0] + std::conj(h[0][1]) * p.W[1],
                      std::conj(h[1][0]) * p.W[0] + std::conj(h[1][1]) * p.W[1]}};

  LevelSetCoords hc = c;
  hc.z1 = h[0][0] * c.z1 + h[0][1] * c.z2;
  hc.z2 = h[1][0] * c.z1 + h[1][1] * c.z2;
  AmbientPoint direct = embed(hc);

  MomentValues m0 = moment_maps(p, c.kappa);
  MomentValues m1 = moment_maps(acted, c.kappa);
  double merr = std::abs(m1.mu_r - m0.mu_r) + std::abs(m1.mu_c - m0.mu_c);

  double eerr = 0.0;
  for (int i = 0; i < 2; ++i) {
    eerr = std::max(eerr, std::abs(direct.Z[i] - acted.Z[i]));
    eerr = std::max(eerr, std::abs(direct.W[i] - det * acted.W[i]));
  }
  return {merr, eerr};
}

}  // namespace hk
}  // namespace spinc
