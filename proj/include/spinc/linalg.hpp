#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "spinc/point.hpp"

namespace spinc {

/// Dense complex matrix, row-major, sized for chart dimensions (n+1 <= 9).
struct CMat {
  int n = 0;
  std::vector<cplx> a;

  CMat() = default;
  explicit CMat(int nn) : n(nn), a(nn * nn, cplx(0.0)) {}

  cplx& operator()(int i, int j) { return a[i * n + j]; }
  const cplx& operator()(int i, int j) const { return a[i * n + j]; }

  static CMat identity(int n) {
    CMat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
  }
};

inline CMat operator*(const CMat& x, const CMat& y) {
  CMat r(x.n);
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      cplx v = x(i, k);
      if (v == cplx(0.0)) continue;
      for (int j = 0; j < x.n; ++j) r(i, j) += v * y(k, j);
    }
  return r;
}

inline double max_abs_diff(const CMat& x, const CMat& y) {
  double m = 0.0;
  for (size_t i = 0; i < x.a.size(); ++i) m = std::max(m, std::abs(x.a[i] - y.a[i]));
  return m;
}

// LU with partial pivoting; returns det and (optionally) the inverse.
inline cplx lu_det(CMat m) {
  cplx det(1.0);
  for (int c = 0; c < m.n; ++c) {
    int piv = c;
    for (int r = c + 1; r < m.n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (std::abs(m(piv, c)) == 0.0) return cplx(0.0);
    if (piv != c) {
      for (int j = 0; j < m.n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (int r = c + 1; r < m.n; ++r) {
      cplx f = m(r, c) / m(c, c);
      for (int j = c; j < m.n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

inline CMat inverse(CMat m) {
  int n = m.n;
  CMat inv = CMat::identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    for (int r = c + 1; r < n; ++r)
      if (std::abs(m(r, c)) > std::abs(m(piv, c))) piv = r;
    if (std::abs(m(piv, c)) == 0.0) throw std::runtime_error("singular matrix");
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(m(piv, j), m(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    cplx d = m(c, c);
    for (int j = 0; j < n; ++j) {
      m(c, j) /= d;
      inv(c, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c) continue;
      cplx f = m(r, c);
      if (f == cplx(0.0)) continue;
      for (int j = 0; j < n; ++j) {
        m(r, j) -= f * m(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

// Least squares min ||A x - b|| via normal equations; A is rows x cols
// (rows >= cols, small and well conditioned in our uses).
inline std::vector<cplx> least_squares(const std::vector<std::vector<cplx>>& A,
                                       const std::vector<cplx>& b) {
  int rows = static_cast<int>(A.size());
  int cols = rows ? static_cast<int>(A[0].size()) : 0;
  CMat ata(cols);
  std::vector<cplx> atb(cols, cplx(0.0));
  for (int i = 0; i < cols; ++i) {
    for (int j = 0; j < cols; ++j) {
      cplx v(0.0);
      for (int r = 0; r < rows; ++r) v += std::conj(A[r][i]) * A[r][j];
      ata(i, j) = v;
    }
    for (int r = 0; r < rows; ++r) atb[i] += std::conj(A[r][i]) * b[r];
  }
  CMat inv = inverse(ata);
  std::vector<cplx> x(cols, cplx(0.0));
  for (int i = 0; i < cols; ++i)
    for (int j = 0; j < cols; ++j) x[i] += inv(i, j) * atb[j];
  return x;
}

}  // namespace spinc
