#include "slipflow/pinf_solver.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "slipflow/errors.hpp"
#include "slipflow/robin_solver.hpp"

namespace slipflow {

namespace {

constexpr double kPi = std::numbers::pi;

// sum_{n=0}^{N} c_n cos(n theta), Clenshaw
double cos_series(const std::vector<double>& c, double theta) {
  double ct = std::cos(theta);
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t k = c.size() - 1; k >= 1; --k) {
    double b0 = c[k] + 2.0 * ct * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return c[0] + b1 * ct - b2;
}

double boundary_value(const PinfSolution& sol, double psi) {
  const EllipseGeom& g = sol.geom;
  return cos_series(sol.Vhat, 2.0 * psi) -
         g.c * g.c / 8.0 * (std::cosh(2.0 * g.eta0) + std::cos(2.0 * psi));
}

}  // namespace

int default_pinf_truncation(const EllipseGeom& geom) {
  if (geom.is_circle) return 2;
  // ghat_n ~ exp(-2 n eta0); the products Vhat_n ghat_n fall like exp(-4 n eta0)
  double n = 36.0 / (4.0 * geom.eta0);
  return std::max(32, static_cast<int>(std::ceil(n)));
}

std::vector<double> vinf_tail(const EllipseGeom& geom, int N, const FourierCoeffs& ghat) {
  std::vector<double> v(N + 1, 0.0);
  if (geom.is_circle) return v;
  if (ghat.kind != CoeffKind::GHAT || ghat.N < N)
    throw ContractError("vinf_tail needs GHAT coefficients up to index N");
  for (int n = 1; n <= N; ++n)
    v[n] = -kPi * ghat.values[n] / (8.0 * n * geom.E * std::tanh(2.0 * n * geom.eta0));
  return v;
}

V0Result v0(const EllipseGeom& geom, int N, const FourierCoeffs& ghat) {
  V0Result r;
  if (geom.is_circle) {
    r.value = 0.25;
    return r;
  }
  std::vector<double> v = vinf_tail(geom, N, ghat);
  const double a = geom.a, e2 = geom.e2;
  const double Ip = -(a * a * a / 3.0) * ((2.0 - e2) * geom.E + (1.0 - e2) * geom.K);
  double sum = 0.0;
  for (int n = N; n >= 1; --n) sum += v[n] * ghat.values[n];
  double last = N >= 1 ? std::abs(v[N] * ghat.values[N]) : 0.0;
  r.tail_warning = last > 1e-12 * std::abs(sum);
  r.value = -(Ip + a * kPi * sum) / (a * kPi * ghat.values[0]);
  return r;
}

double sigma_inf(const PinfSolution& sol) {
  if (sol.geom.is_circle) return kPi / 8.0;
  const double t = 2.0 * sol.geom.eta0;
  double V1 = sol.N >= 1 ? sol.Vhat[1] / std::cosh(t) : 0.0;
  return -kPi / 8.0 / std::tanh(t) + kPi * sol.Vhat[0] - 0.5 * kPi * V1;
}

// Trapezoid size that resolves all N boundary modes without aliasing.
int boundary_rule_points(int N) {
  int n = 512;
  while (n < 4 * N) n *= 2;
  return n;
}

double sigma_1_with_points(const PinfSolution& sol, int* used) {
  if (sol.geom.is_circle) return 0.0;
  auto integrate = [&](int n) {
    double h = 2.0 * kPi / n, s = 0.0;
    for (int i = 0; i < n; ++i) {
      double psi = i * h;
      double u = boundary_value(sol, psi);
      s += u * u * ghat_pointwise(sol.geom, psi);
    }
    return -sol.geom.a * s * h;
  };
  int n = boundary_rule_points(sol.N);
  double prev = integrate(n);
  while (n < (1 << 18)) {
    n *= 2;
    double cur = integrate(n);
    if (std::abs(cur - prev) <= 1e-13 * std::abs(cur)) {
      if (used) *used = n;
      return cur;
    }
    prev = cur;
  }
  throw NumericalError("sigma_1 boundary quadrature did not converge");
}

double sigma_1(const PinfSolution& sol) { return sigma_1_with_points(sol, nullptr); }

PinfSolution solve_pinf(const EllipseGeom& geom, int N) {
  PinfSolution sol;
  sol.geom = geom;
  if (geom.is_circle) {
    sol.N = N > 0 ? N : 2;
    sol.Vhat.assign(sol.N + 1, 0.0);
    sol.Vhat[0] = 0.25;
    sol.sigma_inf = kPi / 8.0;
    return sol;
  }
  sol.N = N > 0 ? N : default_pinf_truncation(geom);
  FourierCoeffs ghat = coeffs(geom, CoeffKind::GHAT, sol.N);
  sol.Vhat = vinf_tail(geom, sol.N, ghat);
  V0Result r = v0(geom, sol.N, ghat);
  sol.Vhat[0] = r.value;
  sol.tail_warning = r.tail_warning;
  sol.sigma_inf = sigma_inf(sol);
  sol.sigma_1 = sigma_1_with_points(sol, &sol.boundary_points);
  // boundary mean of u_inf, which the choice of V0 makes zero
  const int n = 2 * boundary_rule_points(sol.N);
  double h = 2.0 * kPi / n, s = 0.0;
  for (int i = 0; i < n; ++i)
    s += boundary_value(sol, i * h) * ghat_pointwise(geom, i * h);
  sol.bdry_integral_residual = std::abs(geom.a * s * h);
  return sol;
}

double eval_uinf(const PinfSolution& sol, double eta, double psi) {
  const EllipseGeom& g = sol.geom;
  if (g.is_circle) throw DomainError("elliptic coordinates degenerate for the circle; use eval_uinf_xy");
  if (eta < 0.0 || eta > g.eta0 * (1.0 + 1e-14)) throw DomainError("eta outside [0, eta0]");
  double s = sol.Vhat[0];
  for (int n = sol.N; n >= 1; --n)
    s += sol.Vhat[n] * cosh_ratio(n, eta, g.eta0) * std::cos(2.0 * n * psi);
  return s - g.c * g.c / 8.0 * (std::cosh(2.0 * eta) + std::cos(2.0 * psi));
}

double eval_uinf_xy(const PinfSolution& sol, double x, double y) {
  const EllipseGeom& g = sol.geom;
  if (!(x * x / (g.a * g.a) + y * y / (g.b * g.b) <= 1.0 + 1e-12))
    throw DomainError("point lies outside the ellipse");
  if (g.is_circle) return 0.25 * (1.0 - x * x - y * y);
  auto [eta, psi] = to_elliptic(g, x, y);
  return eval_uinf(sol, std::min(eta, g.eta0), psi);
}

}  // namespace slipflow
