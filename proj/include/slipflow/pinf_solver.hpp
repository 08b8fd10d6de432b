#pragma once

#include <vector>

#include "slipflow/fourier_coeffs.hpp"
#include "slipflow/geometry.hpp"

namespace slipflow {

/// -Lap u = 1 with du/dn = -A/P and zero boundary mean, on the area-pi ellipse.
/// u = V0 + sum_{n>=1} Vhat_n cosh(2n eta)/cosh(2n eta0) cos(2n psi) - (c^2/8)(cosh 2eta + cos 2psi)
struct PinfSolution {
  EllipseGeom geom;
  int N = 0;
  std::vector<double> Vhat;  // Vhat[0] = V0, Vhat[n] = V_n cosh(2n eta0)
  double sigma_inf = 0.0;
  double sigma_1 = 0.0;
  double bdry_integral_residual = 0.0;
  bool tail_warning = false;
  int boundary_points = 0;  // trapezoid points used for sigma_1
};

/// Truncation that makes the neglected V_n ghat_n terms negligible; grows like 1/eta0.
int default_pinf_truncation(const EllipseGeom& geom);

/// Scaled tail Vhat_1..Vhat_N (element 0 is unused and set to 0).
std::vector<double> vinf_tail(const EllipseGeom& geom, int N, const FourierCoeffs& ghat);

struct V0Result {
  double value = 0.0;
  bool tail_warning = false;
};

V0Result v0(const EllipseGeom& geom, int N, const FourierCoeffs& ghat);

double sigma_inf(const PinfSolution& sol);
double sigma_1(const PinfSolution& sol);

PinfSolution solve_pinf(const EllipseGeom& geom, int N = 0);

double eval_uinf(const PinfSolution& sol, double eta, double psi);
double eval_uinf_xy(const PinfSolution& sol, double x, double y);

}  // namespace slipflow
