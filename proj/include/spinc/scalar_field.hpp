#pragma once

#include <cmath>
#include <functional>
#include <memory>
#include <stdexcept>
#include <utility>

#include "spinc/point.hpp"

namespace spinc {

class ScalarField;

namespace detail {

// Expression node. Fields are immutable after construction; eval is pure.
// dim == 0 means the node is usable on charts of any dimension.
struct Expr {
  int dim = 0;
  explicit Expr(int d) : dim(d) {}
  virtual ~Expr() = default;
  virtual cplx eval(const ChartPoint& p) const = 0;
  // Wirtinger derivative: d/dz_mu (bar == false) or d/dzbar_mu (bar == true).
  virtual std::shared_ptr<const Expr> diff(int mu, bool bar) const = 0;
};

using ExprPtr = std::shared_ptr<const Expr>;

inline int merge_dims(int a, int b) {
  if (a == 0) return b;
  if (b == 0) return a;
  if (a != b) throw std::invalid_argument("scalar field chart dimension mismatch");
  return a;
}

}  // namespace detail

/// Complex scalar field given in closed form, carrying exact Wirtinger
/// derivatives of every order through the chain rule. Immutable value type.
class ScalarField {
 public:
  ScalarField() = default;
  explicit ScalarField(detail::ExprPtr n) : node_(std::move(n)) {}

  static ScalarField constant(cplx c);
  static ScalarField coordinate(int mu, int dim);       // z_mu
  static ScalarField coordinate_bar(int mu, int dim);   // zbar_mu
  static ScalarField radius_sq(int dim);                // s = sum |z_mu|^2

  // Function of s alone with caller-supplied value and d/ds. The derivative
  // factory receives this very field so recursive rules like f' = f*r are
  // expressible; used for profiles that only exist by quadrature.
  static ScalarField radial(int dim, std::function<double(double)> value,
                            std::function<ScalarField(const ScalarField&)> dds);

  bool valid() const { return node_ != nullptr; }
  int dim() const { return node_->dim; }

  cplx operator()(const ChartPoint& p) const { return node_->eval(p); }

  ScalarField wirtinger(int mu, bool bar) const {
    return ScalarField(node_->diff(mu, bar));
  }
  ScalarField d_z(int mu) const { return wirtinger(mu, false); }
  ScalarField d_zbar(int mu) const { return wirtinger(mu, true); }

  detail::ExprPtr node() const { return node_; }

 private:
  detail::ExprPtr node_;
};

ScalarField operator+(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a, const ScalarField& b);
ScalarField operator*(const ScalarField& a, const ScalarField& b);
ScalarField operator/(const ScalarField& a, const ScalarField& b);
ScalarField operator-(const ScalarField& a);

ScalarField pow_int(const ScalarField& a, int k);
// a must evaluate to a positive real; result is real.
ScalarField pow_real(const ScalarField& a, double p);
ScalarField conj(const ScalarField& a);
inline ScalarField sqrt(const ScalarField& a) { return pow_real(a, 0.5); }

inline ScalarField operator+(const ScalarField& a, cplx c) { return a + ScalarField::constant(c); }
inline ScalarField operator+(cplx c, const ScalarField& a) { return ScalarField::constant(c) + a; }
inline ScalarField operator-(const ScalarField& a, cplx c) { return a - ScalarField::constant(c); }
inline ScalarField operator-(cplx c, const ScalarField& a) { return ScalarField::constant(c) - a; }
inline ScalarField operator*(const ScalarField& a, cplx c) { return a * ScalarField::constant(c); }
inline ScalarField operator*(cplx c, const ScalarField& a) { return ScalarField::constant(c) * a; }
inline ScalarField operator/(const ScalarField& a, cplx c) { return a / ScalarField::constant(c); }
inline ScalarField operator/(cplx c, const ScalarField& a) { return ScalarField::constant(c) / a; }
inline ScalarField operator*(const ScalarField& a, double c) { return a * cplx(c, 0.0); }
inline ScalarField operator*(double c, const ScalarField& a) { return cplx(c, 0.0) * a; }
inline ScalarField operator/(const ScalarField& a, double c) { return a / cplx(c, 0.0); }
inline ScalarField operator/(double c, const ScalarField& a) { return cplx(c, 0.0) / a; }

namespace detail {

struct ConstExpr final : Expr {
  cplx c;
  explicit ConstExpr(cplx v) : Expr(0), c(v) {}
  cplx eval(const ChartPoint&) const override { return c; }
  ExprPtr diff(int, bool) const override { return std::make_shared<ConstExpr>(cplx(0.0)); }
};

struct CoordExpr final : Expr {
  int mu;
  bool bar;
  CoordExpr(int m, bool b, int d) : Expr(d), mu(m), bar(b) {
    if (m < 0 || m >= d) throw std::invalid_argument("coordinate index out of range");
  }
  cplx eval(const ChartPoint& p) const override {
    require_dim(p, dim);
    return bar ? std::conj(p.z[mu]) : p.z[mu];
  }
  ExprPtr diff(int m, bool b) const override {
    return std::make_shared<ConstExpr>((m == mu && b == bar) ? cplx(1.0) : cplx(0.0));
  }
};

struct AddExpr final : Expr {
  ExprPtr a, b;
  AddExpr(ExprPtr x, ExprPtr y) : Expr(merge_dims(x->dim, y->dim)), a(std::move(x)), b(std::move(y)) {}
  cplx eval(const ChartPoint& p) const override { return a->eval(p) + b->eval(p); }
  ExprPtr diff(int m, bool bb) const override {
    return std::make_shared<AddExpr>(a->diff(m, bb), b->diff(m, bb));
  }
};

struct SubExpr final : Expr {
  ExprPtr a, b;
  SubExpr(ExprPtr x, ExprPtr y) : Expr(merge_dims(x->dim, y->dim)), a(std::move(x)), b(std::move(y)) {}
  cplx eval(const ChartPoint& p) const override { return a->eval(p) - b->eval(p); }
  ExprPtr diff(int m, bool bb) const override {
    return std::make_shared<SubExpr>(a->diff(m, bb), b->diff(m, bb));
  }
};

struct MulExpr final : Expr {
  ExprPtr a, b;
  MulExpr(ExprPtr x, ExprPtr y) : Expr(merge_dims(x->dim, y->dim)), a(std::move(x)), b(std::move(y)) {}
  cplx eval(const ChartPoint& p) const override { return a->eval(p) * b->eval(p); }
  ExprPtr diff(int m, bool bb) const override {
    return std::make_shared<AddExpr>(std::make_shared<MulExpr>(a->diff(m, bb), b),
                                     std::make_shared<MulExpr>(a, b->diff(m, bb)));
  }
};

struct DivExpr final : Expr {
  ExprPtr a, b;
  DivExpr(ExprPtr x, ExprPtr y) : Expr(merge_dims(x->dim, y->dim)), a(std::move(x)), b(std::move(y)) {}
  cplx eval(const ChartPoint& p) const override { return a->eval(p) / b->eval(p); }
  ExprPtr diff(int m, bool bb) const override {
    // (a/b)' = a'/b - a b'/b^2
    ExprPtr t1 = std::make_shared<DivExpr>(a->diff(m, bb), b);
    ExprPtr bsq = std::make_shared<MulExpr>(b, b);
    ExprPtr t2 = std::make_shared<DivExpr>(std::make_shared<MulExpr>(a, b->diff(m, bb)), bsq);
    return std::make_shared<SubExpr>(t1, t2);
  }
};

struct NegExpr final : Expr {
  ExprPtr a;
  explicit NegExpr(ExprPtr x) : Expr(x->dim), a(std::move(x)) {}
  cplx eval(const ChartPoint& p) const override { return -a->eval(p); }
  ExprPtr diff(int m, bool bb) const override { return std::make_shared<NegExpr>(a->diff(m, bb)); }
};

struct IntPowExpr final : Expr {
  ExprPtr a;
  int k;
  IntPowExpr(ExprPtr x, int kk) : Expr(x->dim), a(std::move(x)), k(kk) {}
  static cplx ipow(cplx v, int k) {
    if (k == 0) return cplx(1.0);
    if (k < 0) return cplx(1.0) / ipow(v, -k);
    cplx r(1.0), b = v;
    int e = k;
    while (e) {
      if (e & 1) r *= b;
      b *= b;
      e >>= 1;
    }
    return r;
  }
  cplx eval(const ChartPoint& p) const override { return ipow(a->eval(p), k); }
  ExprPtr diff(int m, bool bb) const override {
    if (k == 0) return std::make_shared<ConstExpr>(cplx(0.0));
    ExprPtr lower = std::make_shared<IntPowExpr>(a, k - 1);
    ExprPtr coef = std::make_shared<ConstExpr>(cplx(double(k), 0.0));
    return std::make_shared<MulExpr>(std::make_shared<MulExpr>(coef, lower), a->diff(m, bb));
  }
};

struct RealPowExpr final : Expr {
  ExprPtr a;
  double p;
  RealPowExpr(ExprPtr x, double pp) : Expr(x->dim), a(std::move(x)), p(pp) {}
  cplx eval(const ChartPoint& pt) const override {
    cplx v = a->eval(pt);
    return cplx(std::pow(v.real(), p), 0.0);
  }
  ExprPtr diff(int m, bool bb) const override {
    ExprPtr lower = std::make_shared<RealPowExpr>(a, p - 1.0);
    ExprPtr coef = std::make_shared<ConstExpr>(cplx(p, 0.0));
    return std::make_shared<MulExpr>(std::make_shared<MulExpr>(coef, lower), a->diff(m, bb));
  }
};

struct ConjExpr final : Expr {
  ExprPtr a;
  explicit ConjExpr(ExprPtr x) : Expr(x->dim), a(std::move(x)) {}
  cplx eval(const ChartPoint& p) const override { return std::conj(a->eval(p)); }
  ExprPtr diff(int m, bool bb) const override {
    // d/dz conj(f) = conj(d/dzbar f)
    return std::make_shared<ConjExpr>(a->diff(m, !bb));
  }
};

// s = sum_mu z_mu zbar_mu, kept as a primitive for readable derivatives.
struct RadiusSqExpr final : Expr {
  explicit RadiusSqExpr(int d) : Expr(d) {}
  cplx eval(const ChartPoint& p) const override {
    require_dim(p, dim);
    return cplx(p.s(), 0.0);
  }
  ExprPtr diff(int m, bool bb) const override {
    return std::make_shared<CoordExpr>(m, !bb, dim);
  }
};

struct RadialExpr final : Expr, std::enable_shared_from_this<RadialExpr> {
  std::function<double(double)> value;
  std::function<ScalarField(const ScalarField&)> dds;
  RadialExpr(int d, std::function<double(double)> v,
             std::function<ScalarField(const ScalarField&)> dd)
      : Expr(d), value(std::move(v)), dds(std::move(dd)) {}
  cplx eval(const ChartPoint& p) const override {
    require_dim(p, dim);
    return cplx(value(p.s()), 0.0);
  }
  ExprPtr diff(int m, bool bb) const override {
    ScalarField self(shared_from_this());
    ScalarField chain = dds(self);
    // d s/dz_mu = zbar_mu, d s/dzbar_mu = z_mu
    ExprPtr factor = std::make_shared<CoordExpr>(m, !bb, dim);
    return std::make_shared<MulExpr>(chain.node(), factor);
  }
};

}  // namespace detail

inline ScalarField ScalarField::constant(cplx c) {
  return ScalarField(std::make_shared<detail::ConstExpr>(c));
}
inline ScalarField ScalarField::coordinate(int mu, int dim) {
  return ScalarField(std::make_shared<detail::CoordExpr>(mu, false, dim));
}
inline ScalarField ScalarField::coordinate_bar(int mu, int dim) {
  return ScalarField(std::make_shared<detail::CoordExpr>(mu, true, dim));
}
inline ScalarField ScalarField::radius_sq(int dim) {
  return ScalarField(std::make_shared<detail::RadiusSqExpr>(dim));
}
inline ScalarField ScalarField::radial(int dim, std::function<double(double)> value,
                                       std::function<ScalarField(const ScalarField&)> dds) {
  return ScalarField(std::make_shared<detail::RadialExpr>(dim, std::move(value), std::move(dds)));
}

inline ScalarField operator+(const ScalarField& a, const ScalarField& b) {
  return ScalarField(std::make_shared<detail::AddExpr>(a.node(), b.node()));
}
inline ScalarField operator-(const ScalarField& a, const ScalarField& b) {
  return ScalarField(std::make_shared<detail::SubExpr>(a.node(), b.node()));
}
inline ScalarField operator*(const ScalarField& a, const ScalarField& b) {
  return ScalarField(std::make_shared<detail::MulExpr>(a.node(), b.node()));
}
inline ScalarField operator/(const ScalarField& a, const ScalarField& b) {
  return ScalarField(std::make_shared<detail::DivExpr>(a.node(), b.node()));
}
inline ScalarField operator-(const ScalarField& a) {
  return ScalarField(std::make_shared<detail::NegExpr>(a.node()));
}
inline ScalarField pow_int(const ScalarField& a, int k) {
  return ScalarField(std::make_shared<detail::IntPowExpr>(a.node(), k));
}
inline ScalarField pow_real(const ScalarField& a, double p) {
  return ScalarField(std::make_shared<detail::RealPowExpr>(a.node(), p));
}
inline ScalarField conj(const ScalarField& a) {
  return ScalarField(std::make_shared<detail::ConjExpr>(a.node()));
}

}  // namespace spinc
