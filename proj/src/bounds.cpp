#include "slipflow/bounds.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "slipflow/errors.hpp"

namespace slipflow {

namespace {
constexpr double kPi = std::numbers::pi;
}

std::string_view method_name(Method m) {
  switch (m) {
    case Method::FOURIER: return "fourier";
    case Method::QUAD_VARL: return "quad_varl";
    case Method::R_BOUND: return "r";
    case Method::RA_BOUND: return "ra";
    case Method::KM93_LB: return "km93";
    case Method::UPPER_U: return "upper_u";
    case Method::UPPER_ISO: return "upper_iso";
    case Method::SMALL_BETA: return "small_beta";
    case Method::LARGE_BETA: return "large_beta";
    case Method::NEAR_CIRC: return "near_circ";
    case Method::FD: return "fd";
  }
  return "?";
}

std::string_view kind_name(BoundKind k) {
  switch (k) {
    case BoundKind::EXACT_SERIES: return "exact_series";
    case BoundKind::LOWER: return "lower";
    case BoundKind::UPPER: return "upper";
    case BoundKind::ASYMPTOTIC: return "asymptotic";
  }
  return "?";
}

double q0_ellipse(const EllipseGeom& g) {
  double a2 = g.a * g.a;
  return kPi * a2 / (4.0 * (1.0 + a2 * a2));
}

double q1_ellipse(const EllipseGeom& g) {
  double a = g.a, a4 = a * a * a * a;
  return 4.0 / 3.0 * a * a * a / ((1.0 + a4) * (1.0 + a4)) * (2.0 * (1.0 + a4) * g.E - g.K);
}

FlowEstimate km93_lower(double A, double P, double Q0, double beta) {
  return {Method::KM93_LB, Q0 + beta * A * A / P, BoundKind::LOWER};
}

UpperBounds upper_bounds(const EllipseGeom& g, double beta, double sigma_inf) {
  double A = kPi, P = perimeter(g);
  return {beta * A * A / P + sigma_inf, kPi * (1.0 + 4.0 * beta) / 8.0};
}

QuadraticLB quad_varl_lb(const MomentSet& m, double beta) {
  QuadraticLB r;
  if (beta < 0.0) throw DomainError("slip length must be nonnegative");
  if (beta == 0.0) {
    r.trivial = true;
    return r;
  }
  Eigen::Matrix3d M;
  M << m.P, m.ixx, m.iyy,
       m.ixx, 4.0 * beta * m.Ixx + m.ixxxx, m.ixxyy,
       m.iyy, m.ixxyy, 4.0 * beta * m.Iyy + m.iyyyy;
  Eigen::Vector3d rhs(beta * m.A, beta * m.Ixx, beta * m.Iyy);
  Eigen::FullPivLU<Eigen::Matrix3d> lu(M);
  if (!lu.isInvertible()) throw NumericalError("quadratic lower bound system is singular");
  Eigen::Vector3d c = lu.solve(rhs);
  r.c0 = c(0);
  r.cxx = c(1);
  r.cyy = c(2);
  r.Qc = r.c0 * m.A + r.cxx * m.Ixx + r.cyy * m.Iyy;
  double area = 2.0 * (r.c0 * m.A + r.cxx * (1.0 - 2.0 * r.cxx) * m.Ixx +
                       r.cyy * (1.0 - 2.0 * r.cyy) * m.Iyy);
  double bdry = r.c0 * r.c0 * m.P + 2.0 * r.c0 * r.cxx * m.ixx + 2.0 * r.c0 * r.cyy * m.iyy +
                2.0 * r.cxx * r.cyy * m.ixxyy + r.cxx * r.cxx * m.ixxxx + r.cyy * r.cyy * m.iyyyy;
  r.J = area - bdry / beta;
  return r;
}

FlowEstimate r_bound(double A, double P, double Q0, double sigma_inf, double sigma_1,
                     double beta) {
  if (sigma_1 > 0.0) throw ContractError("r_bound: sigma_1 must be <= 0");
  if (sigma_inf < Q0) throw ContractError("r_bound: sigma_inf must be >= Q0");
  double D = sigma_inf - Q0;
  double den = beta * D - sigma_1;
  double extra = den > 0.0 ? beta * D * D / den : 0.0;
  return {Method::R_BOUND, Q0 + beta * A * A / P + extra, BoundKind::LOWER};
}

ApproxSigma approx_sigma(const EllipseGeom& g, const MomentSet& m) {
  ApproxSigma s;
  if (g.is_circle) {
    s.sigma_inf = kPi / 8.0;
    return s;
  }
  double a = g.a, a2 = a * a, a4 = a2 * a2;
  double t = a4 - 1.0 - 4.0 * a2 * m.C1 / m.P;
  s.sigma_inf = kPi * (a4 + 0.25 * t * t) / (4.0 * a2 * (a4 + 1.0));
  s.sigma_1 = -t * t * (m.C2 - m.C1 * m.C1 / m.P) / (16.0 * (a4 + 1.0) * (a4 + 1.0));
  return s;
}

FlowEstimate ra_bound(const EllipseGeom& g, const MomentSet& m, double beta) {
  ApproxSigma s = approx_sigma(g, m);
  double Q0 = q0_ellipse(g);
  // the approximation can undershoot Q0 by rounding at the circle
  FlowEstimate r = r_bound(m.A, m.P, Q0, std::max(s.sigma_inf, Q0), std::min(s.sigma_1, 0.0), beta);
  r.method = Method::RA_BOUND;
  return r;
}

FlowEstimate q_small_beta(const EllipseGeom& g, double beta) {
  return {Method::SMALL_BETA, q0_ellipse(g) + beta * q1_ellipse(g), BoundKind::ASYMPTOTIC};
}

FlowEstimate q_large_beta(const EllipseGeom& g, double beta, double sigma_inf, double sigma_1) {
  if (!(beta > 0.0)) throw DomainError("large-beta expansion needs beta > 0");
  double v = beta * kPi * kPi / perimeter(g) + sigma_inf + sigma_1 / beta;
  return {Method::LARGE_BETA, v, BoundKind::ASYMPTOTIC};
}

FlowEstimate q_large_beta_dominant(const EllipseGeom& g, double beta) {
  return {Method::LARGE_BETA, beta * kPi * kPi / perimeter(g), BoundKind::ASYMPTOTIC};
}

FlowEstimate q_near_circular(double e, double beta) {
  if (!(e >= 0.0 && e < 1.0)) throw DomainError("eccentricity outside [0,1)");
  double e2 = e * e;
  double eps = e2 / (2.0 - e2);
  double q1 = -kPi / 16.0 * (1.0 + beta * (1.0 + 6.0 * beta) / (2.0 * (2.0 * beta + 1.0)));
  return {Method::NEAR_CIRC, kPi / 8.0 * (1.0 + 4.0 * beta) + q1 * eps * eps,
          BoundKind::ASYMPTOTIC};
}

bool r1_inequality_check(double A, double P, double Q0, double Q1, double sigma_inf,
                         double sigma_1) {
  double D = sigma_inf - Q0;
  double second = sigma_1 < 0.0 ? -D * D / sigma_1 : 0.0;
  return A * A / P + second <= Q1 * (1.0 + 1e-12);
}

}  // namespace slipflow
