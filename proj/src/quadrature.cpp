#include "slipflow/quadrature.hpp"

#include <cmath>
#include <numbers>

namespace slipflow {

GaussRule gauss_legendre(int n) {
  GaussRule r;
  r.x.resize(n);
  r.w.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
    }
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.x[i] = -x;
    r.x[n - 1 - i] = x;
    r.w[i] = w;
    r.w[n - 1 - i] = w;
  }
  return r;
}

namespace {

double composite(const std::function<double(double)>& f, const GaussRule& g,
                 double lo, double hi, int panels) {
  double h = (hi - lo) / panels;
  double sum = 0.0;
  for (int p = 0; p < panels; ++p) {
    double mid = lo + (p + 0.5) * h;
    double part = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) part += g.w[i] * f(mid + 0.5 * h * g.x[i]);
    sum += part;
  }
  return 0.5 * h * sum;
}

}  // namespace

QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                              double hi, double rel_tol, double abs_floor,
                              int max_panels) {
  static const GaussRule rule = gauss_legendre(20);
  QuadResult r;
  int panels = 1;
  double prev = composite(f, rule, lo, hi, panels);
  while (panels < max_panels) {
    panels *= 2;
    double cur = composite(f, rule, lo, hi, panels);
    r.value = cur;
    r.error = std::abs(cur - prev);
    r.panels = panels;
    if (r.error <= rel_tol * std::max(std::abs(cur), abs_floor)) {
      r.converged = true;
      return r;
    }
    prev = cur;
  }
  return r;
}

double trapezoid_periodic(const std::function<double(double)>& f, double lo,
                          double period, int n) {
  double h = period / n;
  double s = 0.0;
  for (int i = 0; i < n; ++i) s += f(lo + i * h);
  return s * h;
}

}  // namespace slipflow
