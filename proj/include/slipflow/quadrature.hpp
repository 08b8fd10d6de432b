#pragma once

#include <functional>
#include <vector>

namespace slipflow {

struct GaussRule {
  std::vector<double> x;  // nodes on [-1,1]
  std::vector<double> w;
};

/// n-point Gauss-Legendre rule by Newton iteration on P_n.
GaussRule gauss_legendre(int n);

struct QuadResult {
  double value = 0.0;
  double error = 0.0;  // |last - previous| estimate
  int panels = 0;
  bool converged = false;
};

/// Composite 20-point Gauss-Legendre on [lo,hi], doubling the panel count
/// until successive estimates differ by less than rel_tol*scale, where
/// scale = max(|I|, abs_floor).
QuadResult integrate_adaptive(const std::function<double(double)>& f, double lo,
                              double hi, double rel_tol = 1e-12,
                              double abs_floor = 0.0, int max_panels = 1 << 14);

/// Trapezoid rule over one period [lo, lo+period) with n equispaced points.
double trapezoid_periodic(const std::function<double(double)>& f, double lo,
                          double period, int n);

}  // namespace slipflow
