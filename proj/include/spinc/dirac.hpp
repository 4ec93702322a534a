#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "spinc/form.hpp"
#include "spinc/linalg.hpp"
#include "spinc/metric.hpp"

namespace spinc {

/// Pairs the dz leg of a (1,q)-form against the inverse metric and the
/// matching dzbar leg, landing in (0,q-1):
///   c dz_mu wedge dzbar^J  ->  sum_{nu,k} (-1)^k g^{J_k mubar} c dzbar^{J \ J_k}.
/// On (1,1) coefficients T this is sum g^{nu mubar} T_{mu nubar}, which is
/// the pairing that reduces d sigma to the chiral Dirac formulas.
inline FormField metric_contract(const FormField& w, const HermitianMetricField& g) {
  if (w.p() != 1 || w.q() < 1) throw std::invalid_argument("metric_contract needs a (1,q>=1) form");
  if (w.dim() != g.dim()) throw std::invalid_argument("metric_contract dimension mismatch");
  FormField out(w.dim(), 0, w.q() - 1);
  for (const auto& [k, c] : w.coefficients()) {
    int mu = k.I[0];
    for (size_t pos = 0; pos < k.J.size(); ++pos) {
      int nu = k.J[pos];
      IndexList J = k.J;
      J.erase(J.begin() + pos);
      ScalarField term = g.ginv(nu, mu) * c;
      out.add_term({}, std::move(J), (pos % 2) ? -term : term);
    }
  }
  return out;
}

/// Spin-c Dirac operator on Lambda^{0,*}: take the full exterior
/// derivative, keep the (0,q+1) piece, and metric-contract the (1,q)
/// piece. The contraction term is exactly minus the formal adjoint, so
/// the result is (dbar - dbar*) sigma.
inline SpinorField dirac(const SpinorField& s, const HermitianMetricField& g) {
  SpinorField out(s.dim());
  for (int q = 0; q <= s.dim(); ++q) {
    const FormField& part = s.part(q);
    if (part.zero()) continue;
    FormDerivative d = exterior_derivative(part);
    if (q + 1 <= s.dim()) out.part(q + 1) = out.part(q + 1) + d.anti;
    if (q >= 1) out.part(q - 1) = out.part(q - 1) + metric_contract(d.holo, g);
  }
  return out;
}

/// Clifford action of a complex 1-form: the (0,1) part wedges, the (1,0)
/// part contracts through the metric.
inline SpinorField clifford_mul(const OneForm& u, const SpinorField& s,
                                const HermitianMetricField& g) {
  SpinorField out(s.dim());
  for (int q = 0; q <= s.dim(); ++q) {
    const FormField& part = s.part(q);
    if (part.zero()) continue;
    if (q + 1 <= s.dim()) out.part(q + 1) = out.part(q + 1) + wedge(u.a, part);
    if (q >= 1) out.part(q - 1) = out.part(q - 1) + metric_contract(wedge(u.h, part), g);
  }
  return out;
}

inline SpinorField clifford_mul(const OneForm& u, const FormField& w,
                                const HermitianMetricField& g) {
  return clifford_mul(u, SpinorField::from_form(w), g);
}

/// D_A sigma = D sigma + A . sigma for a twisting 1-form A.
inline SpinorField twisted_dirac(const SpinorField& s, const OneForm& A,
                                 const HermitianMetricField& g) {
  return dirac(s, g) + clifford_mul(A, s, g);
}
inline SpinorField twisted_dirac(const FormField& w, const OneForm& A,
                                 const HermitianMetricField& g) {
  return twisted_dirac(SpinorField::from_form(w), A, g);
}

namespace detail {

inline cplx block_det(const CMat& pair, const IndexList& rows, const IndexList& cols) {
  int q = static_cast<int>(rows.size());
  if (q == 0) return cplx(1.0);
  CMat m(q);
  for (int i = 0; i < q; ++i)
    for (int j = 0; j < q; ++j) m(i, j) = pair(rows[i], cols[j]);
  return lu_det(m);
}

inline double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

}  // namespace detail

/// Hermitian pairing <a, b> of two (p,q)-forms under g: determinant
/// pairing on each index block, <dzbar_mu, dzbar_nu> = g^{mu nubar} and
/// the conjugate on holomorphic legs, times the combinatorial factor
/// (p+q choose p) that treats a (p,q)-form as a (p+q)-form. Fixes
/// |dzbar_1 ^ dzbar_2|^2 = 1 and |dz ^ dzbar|-type norms like the
/// Kaehler form's simultaneously.
inline cplx hermitian_pairing(const FormField& a, const FormField& b,
                              const HermitianMetricField& g, const ChartPoint& pt) {
  if (a.p() != b.p() || a.q() != b.q() || a.dim() != b.dim())
    throw std::invalid_argument("pairing needs forms of equal degree");
  if (a.zero() || b.zero()) return cplx(0.0);
  CMat K = g.eval_ginv(pt);
  CMat Kc(K.n);
  for (int i = 0; i < K.n; ++i)
    for (int j = 0; j < K.n; ++j) Kc(i, j) = std::conj(K(i, j));
  auto va = a.eval(pt);
  auto vb = b.eval(pt);
  cplx acc(0.0);
  for (const auto& [ka, ca] : va)
    for (const auto& [kb, cb] : vb) {
      cplx hol = detail::block_det(Kc, ka.I, kb.I);
      cplx anti = detail::block_det(K, ka.J, kb.J);
      acc += ca * std::conj(cb) * hol * anti;
    }
  return acc * detail::binom(a.p() + a.q(), a.p());
}

inline double pointwise_norm_sq(const FormField& w, const HermitianMetricField& g,
                                const ChartPoint& pt) {
  return hermitian_pairing(w, w, g, pt).real();
}

inline double pointwise_norm_sq(const SpinorField& s, const HermitianMetricField& g,
                                const ChartPoint& pt) {
  double acc = 0.0;
  for (int q = 0; q <= s.dim(); ++q) acc += pointwise_norm_sq(s.part(q), g, pt);
  return acc;
}

inline std::function<double(const ChartPoint&)> norm_sq_field(const FormField& w,
                                                              const HermitianMetricField& g) {
  return [w, g](const ChartPoint& p) { return pointwise_norm_sq(w, g, p); };
}

/// Hodge star on real (1,1) two-forms in complex dimension 2 with the
/// complex orientation. On this block star fixes the Kaehler direction
/// and flips the primitive part, so with t = g^{nu mubar} T_{mu nubar}:
///   *T = t g - T,   g meaning the (1,1) form with coefficients g_{mu nubar}.
/// (2,0) and (0,2) forms are self-dual and untouched by this routine.
inline FormField hodge_star_2(const FormField& w, const HermitianMetricField& g) {
  if (g.dim() != 2) throw std::invalid_argument("hodge_star_2 requires complex dimension 2");
  if (w.p() != 1 || w.q() != 1) throw std::invalid_argument("hodge_star_2 acts on (1,1) forms");
  ScalarField trace = ScalarField::constant(0.0);
  for (const auto& [k, c] : w.coefficients()) trace = trace + g.ginv(k.J[0], k.I[0]) * c;
  FormField out(2, 1, 1);
  for (int mu = 0; mu < 2; ++mu)
    for (int nu = 0; nu < 2; ++nu) out.add_term({mu}, {nu}, trace * g.g(mu, nu));
  return out - w;
}

// ---------------------------------------------------------------------
// Tangent-vector evaluation. A real tangent X is passed through its
// holomorphic components v (X = sum v_mu d/dz_mu + conj), so dz_mu(X) =
// v_mu and dzbar_mu(X) = conj(v_mu).

inline cplx eval_one_form(const FormField& w, const ChartPoint& p, const std::vector<cplx>& v) {
  cplx acc(0.0);
  for (const auto& [k, c] : w.coefficients()) {
    if (w.p() == 1)
      acc += c(p) * v[k.I[0]];
    else
      acc += c(p) * std::conj(v[k.J[0]]);
  }
  return acc;
}

inline cplx eval_one_form(const OneForm& u, const ChartPoint& p, const std::vector<cplx>& v) {
  return eval_one_form(u.h, p, v) + eval_one_form(u.a, p, v);
}

inline cplx eval_two_form(const FormField& w, const ChartPoint& p, const std::vector<cplx>& x,
                          const std::vector<cplx>& y) {
  if (w.p() + w.q() != 2) throw std::invalid_argument("eval_two_form needs total degree 2");
  cplx acc(0.0);
  for (const auto& [k, c] : w.coefficients()) {
    cplx val = c(p);
    if (w.p() == 1) {  // dz_i ^ dzbar_j
      int i = k.I[0], j = k.J[0];
      acc += val * (x[i] * std::conj(y[j]) - y[i] * std::conj(x[j]));
    } else if (w.p() == 2) {  // dz_i ^ dz_j
      int i = k.I[0], j = k.I[1];
      acc += val * (x[i] * y[j] - y[i] * x[j]);
    } else {  // dzbar_i ^ dzbar_j
      int i = k.J[0], j = k.J[1];
      acc += val * (std::conj(x[i]) * std::conj(y[j]) - std::conj(y[i]) * std::conj(x[j]));
    }
  }
  return acc;
}

}  // namespace spinc
