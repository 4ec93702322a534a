#pragma once

#include <cmath>
#include <random>
#include <vector>

#include "spinc/point.hpp"

namespace spinc {

// Deterministic sampling for property sweeps. Points are drawn with
// s in [s_min, s_max] (log-uniform), uniformly random phases, and every
// |z_mu| bounded away from zero so chart factors like zbar/z stay tame.
struct PointSampler {
  int dim;
  double s_min = 0.2;
  double s_max = 20.0;
  double min_coord = 1e-3;

  ChartPoint operator()(std::mt19937_64& rng) const {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (;;) {
      double ls = std::log(s_min) + unit(rng) * (std::log(s_max) - std::log(s_min));
      double s = std::exp(ls);
      std::vector<double> w(dim);
      double tot = 0.0;
      for (double& x : w) {
        x = 0.05 + unit(rng);
        tot += x;
      }
      ChartPoint p;
      p.z.resize(dim);
      bool ok = true;
      for (int mu = 0; mu < dim; ++mu) {
        double r = std::sqrt(s * w[mu] / tot);
        if (r < min_coord) {
          ok = false;
          break;
        }
        double ph = 2.0 * M_PI * unit(rng);
        p.z[mu] = cplx(r * std::cos(ph), r * std::sin(ph));
      }
      if (ok) return p;
    }
  }

  ChartPoint at_s(std::mt19937_64& rng, double s) const {
    PointSampler fixed{dim, s, s, min_coord};
    return fixed(rng);
  }
};

// Random complex tangent vector with O(1) entries.
inline std::vector<cplx> random_tangent(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<cplx> v(dim);
  for (auto& x : v) x = cplx(g(rng), g(rng));
  return v;
}

// Haar-ish random unitary via Gram-Schmidt on a complex Gaussian matrix.
inline std::vector<std::vector<cplx>> random_unitary(std::mt19937_64& rng, int n) {
  std::normal_distribution<double> g(0.0, 1.0);
  std::vector<std::vector<cplx>> a(n, std::vector<cplx>(n));
  for (auto& row : a)
    for (auto& x : row) x = cplx(g(rng), g(rng));
  // columns -> orthonormal columns
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < j; ++k) {
      cplx dot(0.0);
      for (int i = 0; i < n; ++i) dot += std::conj(a[i][k]) * a[i][j];
      for (int i = 0; i < n; ++i) a[i][j] -= dot * a[i][k];
    }
    double nrm = 0.0;
    for (int i = 0; i < n; ++i) nrm += std::norm(a[i][j]);
    nrm = std::sqrt(nrm);
    for (int i = 0; i < n; ++i) a[i][j] /= nrm;
  }
  return a;
}

// Random SU(2) matrix [[a, -conj(b)], [b, conj(a)]] with |a|^2+|b|^2 = 1.
inline std::vector<std::vector<cplx>> random_su2(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  cplx a(g(rng), g(rng)), b(g(rng), g(rng));
  double nrm = std::sqrt(std::norm(a) + std::norm(b));
  a /= nrm;
  b /= nrm;
  return {{a, -std::conj(b)}, {b, std::conj(a)}};
}

inline std::vector<cplx> apply_matrix(const std::vector<std::vector<cplx>>& m,
                                      const std::vector<cplx>& v) {
  int n = static_cast<int>(v.size());
  std::vector<cplx> out(n, cplx(0.0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace spinc
