#pragma once

#include <Eigen/Dense>
#include <vector>

#include "slipflow/fourier_coeffs.hpp"
#include "slipflow/geometry.hpp"

namespace slipflow {

inline constexpr int kDefaultTruncation = 32;

struct LinearSystem {
  Eigen::MatrixXd matrix;
  Eigen::VectorXd rhs;
};

/// Solution of -Lap u = 1, u + beta du/dn = 0 on the area-pi ellipse,
/// u = sum Ahat_n cosh(2n eta)/cosh(2n eta0) cos(2n psi) - (c^2/8)(cosh 2eta + cos 2psi).
struct RobinSolution {
  EllipseGeom geom;
  double beta = 0.0;
  int N = 0;
  std::vector<double> Ahat;  // Ahat_n = A_n cosh(2n eta0); Ahat_0 = A_0
  double residual_norm = 0.0;
};

/// Galerkin system for the scaled unknowns; needs g coefficients to index 2N.
LinearSystem assemble(const EllipseGeom& geom, double beta, int N, const FourierCoeffs& g);

RobinSolution solve(const EllipseGeom& geom, double beta, int N = kDefaultTruncation);

double flow_rate(const RobinSolution& sol);

/// u at elliptic coordinates (eta, psi), 0 <= eta <= eta0. Not defined for the circle.
double eval_u(const RobinSolution& sol, double eta, double psi);
double eval_u_eta(const RobinSolution& sol, double eta, double psi);

/// u at Cartesian (x, y) inside the closed ellipse.
double eval_u_xy(const RobinSolution& sol, double x, double y);

/// (eta, psi) of a Cartesian point, through complex arccosh.
std::pair<double, double> to_elliptic(const EllipseGeom& geom, double x, double y);

/// Ratio cosh(2n eta)/cosh(2n eta0) without overflow.
double cosh_ratio(int n, double eta, double eta0);

}  // namespace slipflow
