#pragma once

#include <array>
#include <cmath>
#include <stdexcept>

#include "spinc/calabi.hpp"

namespace spinc {
namespace eh {

// Eguchi-Hanson space in the equal-standing coordinates (z_1, z_2):
// the n = 1 member of the Calabi family, F = sqrt(1 + kappa/s^2),
// plus the structures that only exist in four dimensions.

struct EHParams {
  double kappa;
  void validate() const {
    if (!(kappa >= 0.0)) throw std::invalid_argument("kappa must be nonnegative");
  }
};

inline ScalarField profile_F(double kappa) { return calabi_F(1, kappa); }

// f = F + sqrt(kappa)/s solves s (f - 1/f) = 2 sqrt(kappa).
inline ScalarField profile_f(double kappa) {
  ScalarField s = ScalarField::radius_sq(2);
  return profile_F(kappa) + std::sqrt(kappa) / s;
}

inline double F_of(double s, double kappa) { return std::sqrt(1.0 + kappa / (s * s)); }
inline double f_of(double s, double kappa) { return F_of(s, kappa) + std::sqrt(kappa) / s; }

inline HermitianMetricField metric(double kappa) {
  EHParams{kappa}.validate();
  return calabi_metric(1, kappa);
}

inline FormField kahler_form(double kappa) { return calabi_kahler_form(1, kappa); }
inline FormField l2_form(double kappa) { return calabi_l2_form(1, kappa); }
inline OneForm connection(int ell, double kappa) { return calabi_connection(1, ell, kappa); }

// theta_3 = Im(zbar dz)/F, the metric dual (up to the fixed scale used
// throughout) of the Killing field rotating the fibre circle.
inline OneForm theta3(double kappa) {
  EHParams{kappa}.validate();
  ScalarField iF = ScalarField::constant(cplx(0.0, 0.5)) * pow_int(profile_F(kappa), -1);
  return OneForm(-(iF * zbar_dz(2)), iF * z_dzbar(2));
}

/// Worst pointwise violation of 2 d theta3 = omega - kappa omegaTilde
/// over a seeded sample sweep (the n = 1 Killing identity in its
/// four-dimensional form).
template <typename SampleFn>
IdentityCheck theta3_identity(double kappa, int samples, SampleFn&& sample_point) {
  FormField rhs = kahler_form(kappa) - kappa * l2_form(kappa);
  TwoFormPieces dth = one_form_derivative(theta3(kappa));
  IdentityCheck chk;
  chk.samples = samples;
  for (int t = 0; t < samples; ++t) {
    ChartPoint p = sample_point();
    chk.max_err = std::max({chk.max_err, (2.0 * dth.f11 - rhs).max_abs(p),
                            dth.f20.max_abs(p) + dth.f02.max_abs(p)});
  }
  return chk;
}

// Unitary coframe adapted to the bundle structure. Undefined on the
// z_2 = 0 slice because of the phase factor zbar_2/z_2.
struct Frame {
  FormField e1, e2;
};

inline void require_frame_chart(const ChartPoint& p) {
  if (std::abs(p.z[1]) < 1e-6)
    throw std::domain_error("frame is singular on the z_2 = 0 slice");
}

inline Frame frame(double kappa) {
  EHParams{kappa}.validate();
  int dim = 2;
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = profile_F(kappa);
  ScalarField z1 = ScalarField::coordinate(0, dim), z2 = ScalarField::coordinate(1, dim);
  ScalarField z1b = ScalarField::coordinate_bar(0, dim), z2b = ScalarField::coordinate_bar(1, dim);
  ScalarField phase = z2b / z2;

  FormField base(dim, 1, 0);
  base.add_term({0}, {}, z2);
  base.add_term({1}, {}, -z1);

  FormField fibre(dim, 1, 0);
  fibre.add_term({0}, {}, z1b);
  fibre.add_term({1}, {}, z2b);

  Frame fr{pow_real(F / s, 0.5) * phase * base,
           pow_real(F * s, -0.5) * (ScalarField::constant(1.0) / phase) * fibre};
  return fr;
}

// ------------------------------------------------------------------
// Coordinate charts.

struct BundleChartPoint {
  cplx w;     // base inhomogeneous coordinate
  cplx zeta;  // fibre coordinate, |zeta| = s
};

// (z_1, z_2) -> (w, zeta) = (z_1/z_2, s z_2/zbar_2). Rejects z_2 ~ 0.
inline BundleChartPoint to_bundle(const ChartPoint& p) {
  require_dim(p, 2);
  if (std::abs(p.z[1]) < 1e-12) throw std::domain_error("bundle chart needs z_2 != 0");
  cplx w = p.z[0] / p.z[1];
  cplx zeta = p.s() * p.z[1] / std::conj(p.z[1]);
  return {w, zeta};
}

// Inverse map with the principal branch of sqrt(zeta), arg in (-pi, pi].
// Recovers (z_1, z_2) up to the overall sign lost to the branch choice.
inline ChartPoint from_bundle(const BundleChartPoint& b) {
  cplx root = std::sqrt(b.zeta);
  cplx denom = std::sqrt(cplx(1.0 + std::norm(b.w), 0.0));
  return ChartPoint{root * b.w / denom, root / denom};
}

struct BundleRoundTrip {
  ChartPoint recovered;
  bool branch_flip;  // true when the principal branch returned -z
  double error;
};

inline BundleRoundTrip bundle_round_trip(const ChartPoint& p) {
  ChartPoint r = from_bundle(to_bundle(p));
  double direct = std::abs(r.z[0] - p.z[0]) + std::abs(r.z[1] - p.z[1]);
  double flipped = std::abs(r.z[0] + p.z[0]) + std::abs(r.z[1] + p.z[1]);
  if (direct <= flipped) return {r, false, direct};
  return {r, true, flipped};
}

// Bi-axial chart r > kappa^{1/4}, r^4 = s^2 + kappa; the psi circle has
// period 2 pi, matching the Z_2 quotient at infinity.
struct BiaxialPoint {
  double r, theta, phi, psi;
};

inline ChartPoint from_biaxial(const BiaxialPoint& b, double kappa) {
  double s2 = b.r * b.r * b.r * b.r - kappa;
  if (!(s2 > 0.0)) throw std::domain_error("bi-axial chart needs r^4 > kappa");
  double rs = std::sqrt(std::sqrt(s2));  // sqrt(s)
  cplx z1 = rs * std::cos(b.theta / 2.0) *
            std::exp(cplx(0.0, 0.5 * (b.psi + b.phi)));
  cplx z2 = rs * std::sin(b.theta / 2.0) *
            std::exp(cplx(0.0, 0.5 * (b.psi - b.phi)));
  return ChartPoint{z1, z2};
}

inline BiaxialPoint to_biaxial(const ChartPoint& p, double kappa) {
  require_dim(p, 2);
  double s = p.s();
  double r = std::sqrt(std::sqrt(s * s + kappa));
  double theta = 2.0 * std::atan2(std::abs(p.z[1]), std::abs(p.z[0]));
  double phi = std::arg(p.z[0]) - std::arg(p.z[1]);
  double psi = std::arg(p.z[0]) + std::arg(p.z[1]);
  auto wrap = [](double a) {
    while (a < 0.0) a += 2.0 * M_PI;
    while (a >= 2.0 * M_PI) a -= 2.0 * M_PI;
    return a;
  };
  return {r, theta, wrap(phi), wrap(psi)};
}

// Left-invariant coframe on the angular orbits, evaluated on a tangent
// (dtheta, dphi, dpsi). They satisfy d eta_i = (1/2) eps_{ijk} eta_j ^ eta_k.
inline std::array<double, 3> biaxial_eta(const BiaxialPoint& b, const std::array<double, 3>& d) {
  double dtheta = d[0], dphi = d[1], dpsi = d[2];
  return {std::sin(b.psi) * dtheta - std::cos(b.psi) * std::sin(b.theta) * dphi,
          -std::cos(b.psi) * dtheta - std::sin(b.psi) * std::sin(b.theta) * dphi,
          dpsi + std::cos(b.theta) * dphi};
}

// Quadratic form of the bi-axial metric on a tangent (dr, dtheta, dphi, dpsi).
inline double biaxial_metric_form(const BiaxialPoint& b, const std::array<double, 4>& d,
                                  double kappa) {
  double w = 1.0 - kappa / (b.r * b.r * b.r * b.r);
  if (!(w > 0.0)) throw std::domain_error("bi-axial chart needs r^4 > kappa");
  auto eta = biaxial_eta(b, {d[1], d[2], d[3]});
  double r2q = b.r * b.r / 4.0;
  return d[0] * d[0] / w + r2q * w * eta[2] * eta[2] + r2q * (eta[0] * eta[0] + eta[1] * eta[1]);
}

}  // namespace eh
}  // namespace spinc
