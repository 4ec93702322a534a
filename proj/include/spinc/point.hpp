#pragma once

#include <complex>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace spinc {

using cplx = std::complex<double>;

/// A point of a C^{dim} coordinate chart. Coordinates are the complex
/// z_mu; all fields and forms are evaluated at such points.
struct ChartPoint {
  std::vector<cplx> z;

  ChartPoint() = default;
  explicit ChartPoint(std::vector<cplx> zz) : z(std::move(zz)) {}
  ChartPoint(std::initializer_list<cplx> zz) : z(zz) {}

  int dim() const { return static_cast<int>(z.size()); }

  // s = sum |z_mu|^2
  double s() const {
    double acc = 0.0;
    for (const cplx& v : z) acc += std::norm(v);
    return acc;
  }

  bool finite() const {
    for (const cplx& v : z)
      if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    return true;
  }
};

inline void require_dim(const ChartPoint& p, int dim) {
  if (p.dim() != dim) throw std::invalid_argument("chart dimension mismatch");
}

}  // namespace spinc
