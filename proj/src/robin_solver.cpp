#include "slipflow/robin_solver.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <string>

#include "slipflow/errors.hpp"

namespace slipflow {

namespace {

constexpr double kPi = std::numbers::pi;

void require_inside(const EllipseGeom& geom, double x, double y) {
  double r = x * x / (geom.a * geom.a) + y * y / (geom.b * geom.b);
  if (!(r <= 1.0 + 1e-12))
    throw DomainError("point (" + std::to_string(x) + ", " + std::to_string(y) +
                      ") lies outside the ellipse");
}

double boundary_residual(const RobinSolution& sol) {
  const double kappa = sol.beta / sol.geom.a;
  double worst = 0.0;
  for (int i = 0; i < 512; ++i) {
    double psi = 2.0 * kPi * i / 512;
    double u = eval_u(sol, sol.geom.eta0, psi);
    double un = eval_u_eta(sol, sol.geom.eta0, psi);
    worst = std::max(worst, std::abs(u + kappa * g_pointwise(sol.geom, psi) * un));
  }
  return worst;
}

}  // namespace

double cosh_ratio(int n, double eta, double eta0) {
  if (n == 0) return 1.0;
  double t = 2.0 * n;
  return std::exp(t * (eta - eta0)) * (1.0 + std::exp(-2.0 * t * eta)) /
         (1.0 + std::exp(-2.0 * t * eta0));
}

LinearSystem assemble(const EllipseGeom& geom, double beta, int N, const FourierCoeffs& g) {
  if (beta < 0.0) throw DomainError("slip length must be nonnegative");
  if (g.kind != CoeffKind::G) throw ContractError("assemble needs G coefficients");
  if (g.N < 2 * N)
    throw ContractError("assemble needs g coefficients up to index 2N = " + std::to_string(2 * N) +
                        ", have " + std::to_string(g.N));
  const double kappa = beta / geom.a;
  const double c2 = geom.c * geom.c;
  LinearSystem s;
  s.matrix = Eigen::MatrixXd::Zero(N + 1, N + 1);
  s.rhs = Eigen::VectorXd::Zero(N + 1);
  for (int m = 0; m <= N; ++m) {
    s.matrix(m, m) = m == 0 ? 2.0 * kPi : kPi;
    for (int n = 1; n <= N; ++n) {
      double d = 2.0 * n * kappa * std::tanh(2.0 * n * geom.eta0);
      s.matrix(m, n) += d * 0.5 * kPi * (g.values[n + m] + g.values[std::abs(n - m)]);
    }
    s.rhs(m) = 0.5 * kappa * kPi * g.values[m];
  }
  s.rhs(0) += c2 / 8.0 * std::cosh(2.0 * geom.eta0) * 2.0 * kPi;
  if (N >= 1) s.rhs(1) += c2 / 8.0 * kPi;
  return s;
}

RobinSolution solve(const EllipseGeom& geom, double beta, int N) {
  if (beta < 0.0 || !std::isfinite(beta)) throw DomainError("slip length must be finite and >= 0");
  if (N < 2) throw DomainError("truncation N must be at least 2");
  RobinSolution sol;
  sol.geom = geom;
  sol.beta = beta;
  sol.N = N;
  sol.Ahat.assign(N + 1, 0.0);
  if (geom.is_circle) {
    sol.Ahat[0] = 0.25 + 0.5 * beta;
    return sol;
  }
  if (beta == 0.0) {
    double s2 = std::sinh(2.0 * geom.eta0);
    sol.Ahat[0] = std::cosh(2.0 * geom.eta0) / (4.0 * s2);
    sol.Ahat[1] = 1.0 / (4.0 * s2);
  } else {
    FourierCoeffs g = coeffs(geom, CoeffKind::G, 2 * N);
    LinearSystem sys = assemble(geom, beta, N, g);
    Eigen::PartialPivLU<Eigen::MatrixXd> lu(sys.matrix);
    Eigen::VectorXd x = lu.solve(sys.rhs);
    if (!x.allFinite() || std::abs(lu.determinant()) == 0.0)
      throw NumericalError("Robin system is singular");
    for (int n = 0; n <= N; ++n) sol.Ahat[n] = x(n);
  }
  sol.residual_norm = boundary_residual(sol);
  return sol;
}

double flow_rate(const RobinSolution& sol) {
  if (sol.geom.is_circle) return kPi * (1.0 + 4.0 * sol.beta) / 8.0;
  const double t = 2.0 * sol.geom.eta0;
  double A0 = sol.Ahat[0];
  double A1 = sol.Ahat[1] / std::cosh(t);
  return -kPi / 8.0 / std::tanh(t) + kPi * A0 - 0.5 * kPi * A1;
}

double eval_u(const RobinSolution& sol, double eta, double psi) {
  const EllipseGeom& g = sol.geom;
  if (g.is_circle) throw DomainError("elliptic coordinates degenerate for the circle; use eval_u_xy");
  if (eta < 0.0 || eta > g.eta0 * (1.0 + 1e-14)) throw DomainError("eta outside [0, eta0]");
  double s = 0.0;
  for (int n = sol.N; n >= 0; --n)
    s += sol.Ahat[n] * cosh_ratio(n, eta, g.eta0) * std::cos(2.0 * n * psi);
  return s - g.c * g.c / 8.0 * (std::cosh(2.0 * eta) + std::cos(2.0 * psi));
}

double eval_u_eta(const RobinSolution& sol, double eta, double psi) {
  const EllipseGeom& g = sol.geom;
  if (g.is_circle) throw DomainError("elliptic coordinates degenerate for the circle");
  double s = 0.0;
  for (int n = sol.N; n >= 1; --n) {
    // d/deta cosh(2n eta)/cosh(2n eta0) = 2n tanh(2n eta) * ratio
    s += sol.Ahat[n] * 2.0 * n * std::tanh(2.0 * n * eta) * cosh_ratio(n, eta, g.eta0) *
         std::cos(2.0 * n * psi);
  }
  return s - g.c * g.c / 4.0 * std::sinh(2.0 * eta);
}

std::pair<double, double> to_elliptic(const EllipseGeom& geom, double x, double y) {
  std::complex<double> w = std::acosh(std::complex<double>(x, y) / geom.c);
  return {std::abs(w.real()), w.imag()};
}

double eval_u_xy(const RobinSolution& sol, double x, double y) {
  require_inside(sol.geom, x, y);
  if (sol.geom.is_circle) return 0.25 * (1.0 - x * x - y * y) + 0.5 * sol.beta;
  auto [eta, psi] = to_elliptic(sol.geom, x, y);
  return eval_u(sol, std::min(eta, sol.geom.eta0), psi);
}

}  // namespace slipflow
