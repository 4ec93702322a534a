#pragma once

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "spinc/scalar_field.hpp"

namespace spinc {

using IndexList = std::vector<int>;

// Sorts idx ascending and returns the permutation sign, or 0 on a repeat.
inline int sort_sign(IndexList& idx) {
  int sign = 1;
  for (size_t i = 1; i < idx.size(); ++i)
    for (size_t j = i; j > 0 && idx[j] <= idx[j - 1]; --j) {
      if (idx[j] == idx[j - 1]) return 0;
      std::swap(idx[j], idx[j - 1]);
      sign = -sign;
    }
  return sign;
}

// Key of one antisymmetric basis element dz^I wedge dzbar^J, both lists
// strictly increasing.
struct FormKey {
  IndexList I, J;
  bool operator<(const FormKey& o) const {
    if (I != o.I) return I < o.I;
    return J < o.J;
  }
  bool operator==(const FormKey& o) const { return I == o.I && J == o.J; }
};

/// A (p,q)-form with ScalarField coefficients on increasing multi-index
/// pairs. Absent keys mean zero. Immutable once built up.
class FormField {
 public:
  FormField(int dim, int p, int q) : dim_(dim), p_(p), q_(q) {
    if (p < 0 || q < 0 || p > dim || q > dim)
      throw std::invalid_argument("form degree out of range");
  }

  int dim() const { return dim_; }
  int p() const { return p_; }
  int q() const { return q_; }
  bool zero() const { return coef_.empty(); }

  const std::map<FormKey, ScalarField>& coefficients() const { return coef_; }

  // Adds c * dz^I wedge dzbar^J, normalising index order and sign.
  void add_term(IndexList I, IndexList J, const ScalarField& c) {
    if (static_cast<int>(I.size()) != p_ || static_cast<int>(J.size()) != q_)
      throw std::invalid_argument("multi-index length mismatch");
    int si = sort_sign(I);
    int sj = sort_sign(J);
    int sgn = si * sj;
    if (sgn == 0) return;
    ScalarField term = (sgn == 1) ? c : -c;
    FormKey key{std::move(I), std::move(J)};
    auto it = coef_.find(key);
    if (it == coef_.end())
      coef_.emplace(std::move(key), term);
    else
      it->second = it->second + term;
  }

  ScalarField coefficient(IndexList I, IndexList J) const {
    int si = sort_sign(I);
    int sj = sort_sign(J);
    if (si * sj == 0) return ScalarField::constant(0.0);
    auto it = coef_.find(FormKey{I, J});
    if (it == coef_.end()) return ScalarField::constant(0.0);
    return si * sj == 1 ? it->second : -it->second;
  }

  std::map<FormKey, cplx> eval(const ChartPoint& p) const {
    std::map<FormKey, cplx> out;
    for (const auto& [k, c] : coef_) out.emplace(k, c(p));
    return out;
  }

  double max_abs(const ChartPoint& p) const {
    double m = 0.0;
    for (const auto& [k, c] : coef_) m = std::max(m, std::abs(c(p)));
    return m;
  }

  static FormField scalar(const ScalarField& f, int dim) {
    FormField out(dim, 0, 0);
    out.add_term({}, {}, f);
    return out;
  }
  static FormField dz(int mu, int dim) {
    FormField out(dim, 1, 0);
    out.add_term({mu}, {}, ScalarField::constant(1.0));
    return out;
  }
  static FormField dzbar(int mu, int dim) {
    FormField out(dim, 0, 1);
    out.add_term({}, {mu}, ScalarField::constant(1.0));
    return out;
  }

 private:
  int dim_, p_, q_;
  std::map<FormKey, ScalarField> coef_;
};

inline FormField operator+(const FormField& a, const FormField& b) {
  if (a.dim() != b.dim() || a.p() != b.p() || a.q() != b.q())
    throw std::invalid_argument("form shape mismatch in +");
  FormField out = a;
  for (const auto& [k, c] : b.coefficients()) out.add_term(k.I, k.J, c);
  return out;
}

inline FormField operator*(const ScalarField& f, const FormField& a) {
  FormField out(a.dim(), a.p(), a.q());
  for (const auto& [k, c] : a.coefficients()) out.add_term(k.I, k.J, f * c);
  return out;
}
inline FormField operator*(cplx f, const FormField& a) {
  return ScalarField::constant(f) * a;
}
inline FormField operator*(double f, const FormField& a) {
  return ScalarField::constant(cplx(f, 0.0)) * a;
}
inline FormField operator-(const FormField& a) { return cplx(-1.0, 0.0) * a; }
inline FormField operator-(const FormField& a, const FormField& b) { return a + (-b); }

/// Graded-antisymmetric product. The sign convention keeps every basis
/// element written dz^I wedge dzbar^J: moving b's holomorphic legs past
/// a's antiholomorphic ones costs (-1)^{q_a p_b}.
inline FormField wedge(const FormField& a, const FormField& b) {
  if (a.dim() != b.dim()) throw std::invalid_argument("wedge chart dimension mismatch");
  int p = a.p() + b.p(), q = a.q() + b.q();
  if (p > a.dim() || q > a.dim()) return FormField(a.dim(), std::min(p, a.dim()), std::min(q, a.dim()));
  FormField out(a.dim(), p, q);
  int cross = (a.q() * b.p()) % 2 ? -1 : 1;
  for (const auto& [ka, ca] : a.coefficients())
    for (const auto& [kb, cb] : b.coefficients()) {
      IndexList I = ka.I;
      I.insert(I.end(), kb.I.begin(), kb.I.end());
      IndexList J = ka.J;
      J.insert(J.end(), kb.J.begin(), kb.J.end());
      ScalarField c = ca * cb;
      out.add_term(std::move(I), std::move(J), cross == 1 ? c : -c);
    }
  return out;
}

/// Both graded pieces of the exterior derivative: d = holo + anti with
/// holo of degree (p+1,q) and anti of degree (p,q+1).
struct FormDerivative {
  FormField holo;
  FormField anti;
};

inline FormDerivative exterior_derivative(const FormField& w) {
  int dim = w.dim();
  FormDerivative d{FormField(dim, std::min(w.p() + 1, dim), w.q()),
                   FormField(dim, w.p(), std::min(w.q() + 1, dim))};
  bool holo_room = w.p() + 1 <= dim;
  bool anti_room = w.q() + 1 <= dim;
  int pass = (w.p() % 2) ? -1 : 1;  // dzbar_mu moves past p holomorphic legs
  for (const auto& [k, c] : w.coefficients()) {
    for (int mu = 0; mu < dim; ++mu) {
      if (holo_room && std::find(k.I.begin(), k.I.end(), mu) == k.I.end()) {
        IndexList I = k.I;
        I.insert(I.begin(), mu);
        d.holo.add_term(std::move(I), k.J, c.d_z(mu));
      }
      if (anti_room && std::find(k.J.begin(), k.J.end(), mu) == k.J.end()) {
        IndexList J = k.J;
        J.insert(J.begin(), mu);
        ScalarField dc = c.d_zbar(mu);
        d.anti.add_term(k.I, std::move(J), pass == 1 ? dc : -dc);
      }
    }
  }
  return d;
}

// conj maps (p,q) to (q,p): conj(c dz^I dzbar^J) = conj(c) dz^J dzbar^I
// up to the sign of reordering the legs, which is (-1)^{pq}.
inline FormField conj(const FormField& a) {
  FormField out(a.dim(), a.q(), a.p());
  int sgn = (a.p() * a.q()) % 2 ? -1 : 1;
  for (const auto& [k, c] : a.coefficients()) {
    ScalarField cc = conj(c);
    out.add_term(k.J, k.I, sgn == 1 ? cc : -cc);
  }
  return out;
}

/// A complex 1-form split into its (1,0) and (0,1) parts.
struct OneForm {
  FormField h;  // (1,0)
  FormField a;  // (0,1)

  explicit OneForm(int dim) : h(dim, 1, 0), a(dim, 0, 1) {}
  OneForm(FormField h10, FormField a01) : h(std::move(h10)), a(std::move(a01)) {
    if (h.p() != 1 || h.q() != 0 || a.p() != 0 || a.q() != 1)
      throw std::invalid_argument("OneForm parts must be (1,0) and (0,1)");
  }
  int dim() const { return h.dim(); }
};

inline OneForm conj(const OneForm& u) { return OneForm(conj(u.a), conj(u.h)); }

// d of a function, split into its two legs.
inline OneForm d_of_function(const ScalarField& f, int dim) {
  FormField h(dim, 1, 0), a(dim, 0, 1);
  for (int mu = 0; mu < dim; ++mu) {
    h.add_term({mu}, {}, f.d_z(mu));
    a.add_term({}, {mu}, f.d_zbar(mu));
  }
  return OneForm(std::move(h), std::move(a));
}

inline OneForm operator+(const OneForm& x, const OneForm& y) {
  return OneForm(x.h + y.h, x.a + y.a);
}
inline OneForm operator-(const OneForm& x, const OneForm& y) {
  return OneForm(x.h - y.h, x.a - y.a);
}
inline OneForm operator*(const ScalarField& f, const OneForm& u) {
  return OneForm(f * u.h, f * u.a);
}
inline OneForm operator*(cplx c, const OneForm& u) { return OneForm(c * u.h, c * u.a); }

/// Element of Lambda^{0,*}; parts[q] is the (0,q) component.
class SpinorField {
 public:
  explicit SpinorField(int dim) : dim_(dim) {
    for (int q = 0; q <= dim; ++q) parts_.emplace_back(dim, 0, q);
  }
  static SpinorField from_form(const FormField& w) {
    if (w.p() != 0) throw std::invalid_argument("spinor components live in Lambda^{0,*}");
    SpinorField s(w.dim());
    s.parts_[w.q()] = w;
    return s;
  }
  static SpinorField from_scalar(const ScalarField& f, int dim) {
    return from_form(FormField::scalar(f, dim));
  }

  int dim() const { return dim_; }
  const FormField& part(int q) const { return parts_.at(q); }
  FormField& part(int q) { return parts_.at(q); }

  SpinorField& operator+=(const SpinorField& o) {
    for (int q = 0; q <= dim_; ++q) parts_[q] = parts_[q] + o.parts_[q];
    return *this;
  }

  double max_abs(const ChartPoint& p) const {
    double m = 0.0;
    for (const auto& w : parts_) m = std::max(m, w.max_abs(p));
    return m;
  }

 private:
  int dim_;
  std::vector<FormField> parts_;
};

inline SpinorField operator+(SpinorField a, const SpinorField& b) {
  a += b;
  return a;
}
inline SpinorField operator*(const ScalarField& f, const SpinorField& s) {
  SpinorField out(s.dim());
  for (int q = 0; q <= s.dim(); ++q) out.part(q) = f * s.part(q);
  return out;
}
inline SpinorField operator*(cplx c, const SpinorField& s) {
  return ScalarField::constant(c) * s;
}

}  // namespace spinc
