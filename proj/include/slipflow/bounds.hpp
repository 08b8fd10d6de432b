#pragma once

#include <string_view>

#include "slipflow/geometry.hpp"

namespace slipflow {

enum class Method {
  FOURIER, QUAD_VARL, R_BOUND, RA_BOUND, KM93_LB, UPPER_U, UPPER_ISO,
  SMALL_BETA, LARGE_BETA, NEAR_CIRC, FD
};
enum class BoundKind { EXACT_SERIES, LOWER, UPPER, ASYMPTOTIC };

std::string_view method_name(Method m);
std::string_view kind_name(BoundKind k);

struct FlowEstimate {
  Method method = Method::FOURIER;
  double value = 0.0;
  BoundKind kind = BoundKind::EXACT_SERIES;
};

/// v = c0 + cxx x^2 + cyy y^2 maximizing the variational functional.
struct QuadraticLB {
  double c0 = 0.0, cxx = 0.0, cyy = 0.0;
  double J = 0.0;   // functional at the maximizer
  double Qc = 0.0;  // c0 A + cxx Ixx + cyy Iyy
  bool trivial = false;  // beta = 0: the bound degenerates to 0
};

/// Q at beta = 0 for the area-pi ellipse, pi a^2 / (4 (1 + a^4)).
double q0_ellipse(const EllipseGeom& g);
/// dQ/dbeta at beta = 0.
double q1_ellipse(const EllipseGeom& g);

FlowEstimate km93_lower(double A, double P, double Q0, double beta);

struct UpperBounds {
  double U = 0.0;
  double Q_iso = 0.0;
};
UpperBounds upper_bounds(const EllipseGeom& g, double beta, double sigma_inf);

QuadraticLB quad_varl_lb(const MomentSet& m, double beta);

FlowEstimate r_bound(double A, double P, double Q0, double sigma_inf, double sigma_1, double beta);

struct ApproxSigma {
  double sigma_inf = 0.0;
  double sigma_1 = 0.0;
};
/// Quadratic-test-function approximations of sigma_inf and sigma_1.
ApproxSigma approx_sigma(const EllipseGeom& g, const MomentSet& m);
FlowEstimate ra_bound(const EllipseGeom& g, const MomentSet& m, double beta);

FlowEstimate q_small_beta(const EllipseGeom& g, double beta);
FlowEstimate q_large_beta(const EllipseGeom& g, double beta, double sigma_inf, double sigma_1);
/// beta A^2/P alone.
FlowEstimate q_large_beta_dominant(const EllipseGeom& g, double beta);
FlowEstimate q_near_circular(double e, double beta);

bool r1_inequality_check(double A, double P, double Q0, double Q1, double sigma_inf,
                         double sigma_1);

}  // namespace slipflow
