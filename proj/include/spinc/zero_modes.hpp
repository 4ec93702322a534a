#pragma once

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "spinc/calabi.hpp"
#include "spinc/eh.hpp"
#include "spinc/quadrature.hpp"

namespace spinc {

/// Discrete data selecting one closed-form zero mode of the twisted
/// Dirac operator. For n = 1 the SU(2) labels (N, m) are half-integers
/// stored doubled; for n > 1 the monomial exponent vector replaces them.
struct ZeroModeSpec {
  int n = 1;
  int twoN = 0;
  int twoM = 0;
  std::vector<int> exponents;  // size n+1 when n > 1
  int ell = 0;
  double kappa = 1.0;

  static ZeroModeSpec eh(int twoN, int twoM, int ell, double kappa) {
    ZeroModeSpec s;
    s.n = 1;
    s.twoN = twoN;
    s.twoM = twoM;
    s.ell = ell;
    s.kappa = kappa;
    s.validate();
    return s;
  }
  static ZeroModeSpec general(int n, std::vector<int> exponents, int ell, double kappa) {
    ZeroModeSpec s;
    s.n = n;
    s.exponents = std::move(exponents);
    s.ell = ell;
    s.kappa = kappa;
    s.validate();
    return s;
  }

  // polynomial degree: 2N for n = 1, sum of exponents otherwise
  int delta() const {
    if (n == 1) return twoN;
    return std::accumulate(exponents.begin(), exponents.end(), 0);
  }

  void validate() const {
    if (ell < 0) throw std::invalid_argument("negative flux is not supported");
    // kappa = 0 is the flat reduction: the twist vanishes with it
    if (!(kappa >= 0.0)) throw std::invalid_argument("kappa must be nonnegative");
    if (n == 1) {
      if (twoN < 0 || (twoN + twoM) % 2 != 0)
        throw std::invalid_argument("need N >= 0 with N - m integral");
      if (twoM < -twoN || twoM > twoN) throw std::invalid_argument("need -N <= m <= N");
    } else {
      if (static_cast<int>(exponents.size()) != n + 1)
        throw std::invalid_argument("exponent vector must have n+1 entries");
      for (int k : exponents)
        if (k < 0) throw std::invalid_argument("exponents must be nonnegative");
    }
  }
};

enum class NormClass { Normalisable, LogDivergent, PowerDivergentAtZero, DivergentAtInfinity };

inline std::string to_string(NormClass c) {
  switch (c) {
    case NormClass::Normalisable: return "normalisable";
    case NormClass::LogDivergent: return "log-divergent";
    case NormClass::PowerDivergentAtZero: return "power-divergent-at-zero";
    default: return "divergent-at-infinity";
  }
}

// ---------------------------------------------------------------------
// Eguchi-Hanson modes (n = 1), closed form throughout.

/// sigma = z_1^{N-m} z_2^{N+m} (z dzbar) / (F s^{2N+2} f^{l/2}).
/// The radial factor h = 1/(F s^{2N+2} f^{l/2}) is the solution of
///   F^2 (2N h + (h s)') + h = (l/2) sqrt(kappa) h F / s,
/// the scalar part of the twisted Dirac equation on this ansatz; the
/// f-exponent l/2 is what that equation fixes.
inline FormField eh_zero_mode(const ZeroModeSpec& spec) {
  spec.validate();
  if (spec.n != 1) throw std::invalid_argument("eh_zero_mode needs an n = 1 spec");
  int a = (spec.twoN - spec.twoM) / 2;  // N - m
  int b = (spec.twoN + spec.twoM) / 2;  // N + m
  int dim = 2;
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = eh::profile_F(spec.kappa);
  ScalarField f = eh::profile_f(spec.kappa);
  ScalarField mono = pow_int(ScalarField::coordinate(0, dim), a) *
                     pow_int(ScalarField::coordinate(1, dim), b);
  ScalarField h = pow_int(F, -1) * pow_int(s, -(spec.twoN + 2)) *
                  pow_real(f, -0.5 * double(spec.ell));
  return (mono * h) * z_dzbar(dim);
}

/// |sigma|^2 = |z_1|^{2(N-m)} |z_2|^{2(N+m)} / (F s^{4N+3} f^l), using
/// |z dzbar|^2 = F s. Must agree with the engine pairing of eh_zero_mode.
inline ScalarField eh_norm_sq(const ZeroModeSpec& spec) {
  spec.validate();
  if (spec.n != 1) throw std::invalid_argument("eh_norm_sq needs an n = 1 spec");
  int a = (spec.twoN - spec.twoM) / 2;
  int b = (spec.twoN + spec.twoM) / 2;
  int dim = 2;
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = eh::profile_F(spec.kappa);
  ScalarField f = eh::profile_f(spec.kappa);
  ScalarField m1 = pow_int(ScalarField::coordinate(0, dim) * ScalarField::coordinate_bar(0, dim), a);
  ScalarField m2 = pow_int(ScalarField::coordinate(1, dim) * ScalarField::coordinate_bar(1, dim), b);
  return m1 * m2 * pow_int(F, -1) * pow_int(s, -(2 * spec.twoN + 3)) *
         pow_int(f, -spec.ell);
}

/// Small-r behaviour |sigma|^2 r^3 ~ r^{2l - 4N - 1}: square-integrable
/// iff 2N < l; the boundary 2N = l is the logarithmic case. Large r is
/// always integrable for N >= 0.
inline NormClass classify_eh(int twoN, int ell) {
  if (ell < 0) throw std::invalid_argument("negative flux is not supported");
  if (twoN < 0) throw std::invalid_argument("need N >= 0");
  if (twoN < ell) return NormClass::Normalisable;
  if (twoN == ell) return NormClass::LogDivergent;
  return NormClass::PowerDivergentAtZero;
}

inline int multiplet_dim(int twoN) { return twoN + 1; }

/// Number of normalisable modes at flux l, by enumerating multiplets.
inline int count_eh(int ell) {
  int total = 0;
  for (int twoN = 0; twoN <= ell; ++twoN)
    if (classify_eh(twoN, ell) == NormClass::Normalisable) total += multiplet_dim(twoN);
  return total;
}

// ---------------------------------------------------------------------
// General n. The radial profile has no elementary closed form; it is
// pinned by (log f_n)' = l kappa^{n/(n+1)} / (2 F^n s^{n+1}) with
// f_n(1) = 1, evaluated by adaptive quadrature. Only the ratio matters
// for the zero-mode property.

inline double fn_log_derivative(double s, int n, int ell, double kappa) {
  double F = calabi_F_of(s, n, kappa);
  return 0.5 * double(ell) * std::pow(kappa, double(n) / double(n + 1)) /
         (std::pow(F, n) * std::pow(s, n + 1));
}

inline ScalarField fn_profile(int n, int ell, double kappa) {
  int dim = n + 1;
  // One cumulative integral per profile; the node is shared across every
  // derivative tree that references it, so the rung cache and the memo
  // of exact repeats remove nearly all quadrature cost.
  auto cum = std::make_shared<CumulativeIntegral>(
      [n, ell, kappa](double t) { return fn_log_derivative(t, n, ell, kappa); }, 1.0);
  auto cache = std::make_shared<std::map<double, double>>();
  auto lock = std::make_shared<std::mutex>();
  auto value = [cum, cache, lock](double s) {
    {
      std::lock_guard<std::mutex> hold(*lock);
      auto it = cache->find(s);
      if (it != cache->end()) return it->second;
    }
    double v = std::exp((*cum)(s));
    std::lock_guard<std::mutex> hold(*lock);
    cache->emplace(s, v);
    return v;
  };
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = calabi_F(n, kappa);
  ScalarField rate = ScalarField::constant(0.5 * double(ell) *
                                           std::pow(kappa, double(n) / double(n + 1))) *
                     pow_int(F, -n) * pow_int(s, -(n + 1));
  return ScalarField::radial(dim, value,
                             [rate](const ScalarField& self) { return self * rate; });
}

/// sigma = P(z) h(s) dbar s with P the monomial of the exponent vector
/// and h = f_n / (F^n s^{delta + n + 1}).
inline FormField general_zero_mode(const ZeroModeSpec& spec) {
  spec.validate();
  int n = spec.n;
  int dim = n + 1;
  int delta = spec.delta();
  ScalarField P = ScalarField::constant(1.0);
  if (n == 1) {
    P = pow_int(ScalarField::coordinate(0, dim), (spec.twoN - spec.twoM) / 2) *
        pow_int(ScalarField::coordinate(1, dim), (spec.twoN + spec.twoM) / 2);
  } else {
    for (int i = 0; i < dim; ++i)
      if (spec.exponents[i] > 0)
        P = P * pow_int(ScalarField::coordinate(i, dim), spec.exponents[i]);
  }
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = calabi_F(n, spec.kappa);
  ScalarField h = fn_profile(n, spec.ell, spec.kappa) * pow_int(F, -n) *
                  pow_int(s, -(delta + n + 1));
  return (P * h) * z_dzbar(dim);
}

/// Radial form of the scalar part of the twisted Dirac equation:
///   F^{n+1} ((delta+1) h + h' s) + n h - l kappa^{n/(n+1)} h F / (2 s^n),
/// with h' recovered from the Wirtinger derivatives of h.
inline ScalarField ode_residual(int n, const ScalarField& h, int delta, int ell, double kappa) {
  int dim = n + 1;
  ScalarField s = ScalarField::radius_sq(dim);
  ScalarField F = calabi_F(n, kappa);
  ScalarField hp = ScalarField::constant(0.0);
  for (int mu = 0; mu < dim; ++mu)
    hp = hp + ScalarField::coordinate(mu, dim) * h.d_z(mu);
  hp = hp / s;  // h'(s)
  ScalarField twist = ScalarField::constant(0.5 * double(ell) *
                                            std::pow(kappa, double(n) / double(n + 1))) *
                      h * F * pow_int(s, -n);
  return pow_int(F, n + 1) * (double(delta + 1) * h + hp * s) + double(n) * h - twist;
}

/// Small-r exponent 2l - 2delta - 1: square-integrable iff l > delta.
inline NormClass classify_general(int delta, int ell, int n) {
  if (ell < 0) throw std::invalid_argument("negative flux is not supported");
  if (n < 1 || delta < 0) throw std::invalid_argument("invalid mode data");
  if (ell > delta) return NormClass::Normalisable;
  if (ell == delta) return NormClass::LogDivergent;
  return NormClass::PowerDivergentAtZero;
}

}  // namespace spinc
