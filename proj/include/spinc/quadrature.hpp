#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <mutex>
#include <vector>

namespace spinc {

struct QuadResult {
  double value = 0.0;
  double error = 0.0;
  bool converged = true;
};

namespace detail {

// Gauss 7 / Kronrod 15 nodes and weights on [-1, 1].
struct GK15 {
  static constexpr std::array<double, 8> xk{
      0.991455371120813, 0.949107912342759, 0.864864423359769, 0.741531185599394,
      0.586087235467691, 0.405845151377397, 0.207784955007898, 0.000000000000000};
  static constexpr std::array<double, 8> wk{
      0.022935322010529, 0.063092092629979, 0.104790010322250, 0.140653259715525,
      0.169004726639267, 0.190350578064785, 0.204432940075298, 0.209482141084728};
  static constexpr std::array<double, 4> wg{0.129484966168870, 0.279705391489277,
                                            0.381830050505119, 0.417959183673469};

  static void apply(const std::function<double(double)>& f, double a, double b, double& val,
                    double& err) {
    double c = 0.5 * (a + b), h = 0.5 * (b - a);
    double fc = f(c);
    double k = wk[7] * fc, g = wg[3] * fc;
    for (int i = 0; i < 7; ++i) {
      double x = h * xk[i];
      double fv = f(c - x) + f(c + x);
      k += wk[i] * fv;
      if (i % 2 == 1) g += wg[i / 2] * fv;
    }
    val = k * h;
    err = std::abs((k - g) * h);
    // sharpen relative to the interval scale, never inflate
    double scale = std::abs(val) + 1e-300;
    double rel = err / scale;
    err = scale * std::min(rel, std::pow(200.0 * rel, 1.5));
    if (!(err >= 0.0)) err = std::abs(val);
  }
};

}  // namespace detail

/// Adaptive bisection built on Gauss-Kronrod 7/15. Deterministic: the
/// subdivision order is a fixed stack discipline.
inline QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                            double abs_tol = 1e-10, double rel_tol = 1e-9,
                            int max_intervals = 4000) {
  struct Seg {
    double a, b, val, err;
  };
  std::vector<Seg> work;
  double v0, e0;
  detail::GK15::apply(f, a, b, v0, e0);
  work.push_back({a, b, v0, e0});
  double total = v0, toterr = e0;
  int used = 1;
  while (toterr > std::max(abs_tol, rel_tol * std::abs(total)) && used < max_intervals) {
    // split the worst segment
    size_t worst = 0;
    for (size_t i = 1; i < work.size(); ++i)
      if (work[i].err > work[worst].err) worst = i;
    Seg s = work[worst];
    work.erase(work.begin() + worst);
    double mid = 0.5 * (s.a + s.b);
    Seg l, r;
    l.a = s.a;
    l.b = mid;
    r.a = mid;
    r.b = s.b;
    detail::GK15::apply(f, l.a, l.b, l.val, l.err);
    detail::GK15::apply(f, r.a, r.b, r.val, r.err);
    total += l.val + r.val - s.val;
    toterr += l.err + r.err - s.err;
    work.push_back(l);
    work.push_back(r);
    ++used;
  }
  // recompute the totals to avoid drift
  total = 0.0;
  toterr = 0.0;
  for (const Seg& s : work) {
    total += s.val;
    toterr += s.err;
  }
  return {total, toterr, toterr <= std::max(abs_tol, rel_tol * std::abs(total)) * 4.0};
}

/// Integral over [a, infinity) by the substitution t = 1/s. The Kronrod
/// nodes are interior, so the integrand is never evaluated at t = 0.
inline QuadResult integrate_to_infinity(const std::function<double(double)>& f, double a,
                                        double abs_tol = 1e-10, double rel_tol = 1e-9) {
  auto sub = [&f](double t) {
    double s = 1.0 / t;
    return f(s) * s * s;
  };
  return integrate(sub, 0.0, 1.0 / a, abs_tol, rel_tol);
}

/// I(s) = int_anchor^s f, with cached rungs on the anchor * 2^k ladder so
/// repeated evaluations across a wide range stay cheap. Evaluation is
/// guarded for concurrent readers.
class CumulativeIntegral {
 public:
  CumulativeIntegral(std::function<double(double)> f, double anchor)
      : f_(std::move(f)), anchor_(anchor) {}

  double operator()(double s) const {
    std::lock_guard<std::mutex> hold(lock_);
    double pos = anchor_, acc = 0.0;
    while (s > 2.0 * pos) {
      acc += rung(pos);
      pos *= 2.0;
    }
    while (s < 0.5 * pos) {
      pos *= 0.5;
      acc -= rung(pos);
    }
    acc += integrate(f_, pos, s, 1e-13, 1e-12, 400).value;
    return acc;
  }

 private:
  double rung(double a) const {  // cached int_a^{2a} f
    auto it = rungs_.find(a);
    if (it != rungs_.end()) return it->second;
    double v = integrate(f_, a, 2.0 * a, 1e-13, 1e-12, 400).value;
    rungs_.emplace(a, v);
    return v;
  }

  std::function<double(double)> f_;
  double anchor_;
  mutable std::map<double, double> rungs_;
  mutable std::mutex lock_;
};

}  // namespace spinc
