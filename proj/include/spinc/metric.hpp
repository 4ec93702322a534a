#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "spinc/linalg.hpp"
#include "spinc/scalar_field.hpp"

namespace spinc {

/// Hermitian metric g_{mu nubar} with a closed-form inverse and volume
/// density v_g = det(g). Component layout: g(mu, nu) multiplies
/// dz_mu (x) dzbar_nu; the metric as a real bilinear form is
/// g(X, Y) = Re sum g_{mu nubar} X^mu conj(Y^nu).
class HermitianMetricField {
 public:
  HermitianMetricField(int dim, std::vector<ScalarField> g, std::vector<ScalarField> ginv,
                       ScalarField det)
      : dim_(dim), g_(std::move(g)), ginv_(std::move(ginv)), det_(std::move(det)) {
    if (g_.size() != size_t(dim * dim) || ginv_.size() != size_t(dim * dim))
      throw std::invalid_argument("metric component count mismatch");
  }

  int dim() const { return dim_; }
  const ScalarField& g(int mu, int nu) const { return g_[mu * dim_ + nu]; }
  const ScalarField& ginv(int mu, int nu) const { return ginv_[mu * dim_ + nu]; }
  const ScalarField& det() const { return det_; }

  CMat eval_g(const ChartPoint& p) const {
    CMat m(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m(i, j) = g(i, j)(p);
    return m;
  }
  CMat eval_ginv(const ChartPoint& p) const {
    CMat m(dim_);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) m(i, j) = ginv(i, j)(p);
    return m;
  }

  // g(X, X) for a real tangent vector with holomorphic components v.
  double qform(const ChartPoint& p, const std::vector<cplx>& v) const {
    cplx acc(0.0);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) acc += g(i, j)(p) * v[i] * std::conj(v[j]);
    return acc.real();
  }
  // polarised form g(X, Y), again real tangents via holomorphic components.
  double qform(const ChartPoint& p, const std::vector<cplx>& v, const std::vector<cplx>& w) const {
    cplx acc(0.0);
    for (int i = 0; i < dim_; ++i)
      for (int j = 0; j < dim_; ++j) acc += g(i, j)(p) * v[i] * std::conj(w[j]);
    return acc.real();
  }

  static HermitianMetricField flat(int dim) {
    std::vector<ScalarField> g, ginv;
    for (int i = 0; i < dim; ++i)
      for (int j = 0; j < dim; ++j) {
        ScalarField e = ScalarField::constant(i == j ? 1.0 : 0.0);
        g.push_back(e);
        ginv.push_back(e);
      }
    return HermitianMetricField(dim, std::move(g), std::move(ginv), ScalarField::constant(1.0));
  }

 private:
  int dim_;
  std::vector<ScalarField> g_, ginv_;
  ScalarField det_;
};

}  // namespace spinc
