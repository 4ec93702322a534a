#pragma once

#include <cmath>
#include <functional>

#include "spinc/point.hpp"

namespace spinc {

// Central finite differences in the 2*dim real chart directions.
// Step h = scale * max(1, |coordinate|) per direction.
struct FiniteDiff {
  double scale = 1e-5;

  // d/dx_mu and d/dy_mu of a complex-valued function of the chart point.
  cplx dx(const std::function<cplx(const ChartPoint&)>& f, const ChartPoint& p, int mu) const {
    double h = scale * std::max(1.0, std::abs(p.z[mu]));
    ChartPoint a = p, b = p;
    a.z[mu] += h;
    b.z[mu] -= h;
    return (f(a) - f(b)) / (2.0 * h);
  }
  cplx dy(const std::function<cplx(const ChartPoint&)>& f, const ChartPoint& p, int mu) const {
    double h = scale * std::max(1.0, std::abs(p.z[mu]));
    ChartPoint a = p, b = p;
    a.z[mu] += cplx(0.0, h);
    b.z[mu] -= cplx(0.0, h);
    return (f(a) - f(b)) / (2.0 * h);
  }

  // Wirtinger derivatives from the real ones:
  //   d/dz = (d/dx - i d/dy)/2,  d/dzbar = (d/dx + i d/dy)/2.
  cplx wirtinger(const std::function<cplx(const ChartPoint&)>& f, const ChartPoint& p, int mu,
                 bool bar) const {
    cplx gx = dx(f, p, mu);
    cplx gy = dy(f, p, mu);
    return bar ? 0.5 * (gx + cplx(0.0, 1.0) * gy) : 0.5 * (gx - cplx(0.0, 1.0) * gy);
  }
};

}  // namespace spinc
