#pragma once

#include <vector>

#include "slipflow/geometry.hpp"

namespace slipflow {

struct FdConfig {
  int nx = 128;
  int ny = 128;
  int refine_levels = 2;  // number of grid doublings beyond the base grid
};

struct FdResult {
  double Q = 0.0;               // finest grid
  double error_estimate = 0.0;  // |Q_L - Q_{L-1}| / 3
  double observed_order = 0.0;  // NaN with a single refinement
  double Q_extrapolated = 0.0;
  std::vector<double> level_Q;
};

/// Nodal values on the quarter domain, row-major in (i, j) with i along
/// x (or eta) and j along y (or psi).
struct FdGrid {
  int nx = 0, ny = 0;
  double hx = 0.0, hy = 0.0;
  std::vector<double> u;
  double at(int i, int j) const { return u[static_cast<std::size_t>(i) * (ny + 1) + j]; }
};

FdResult fd_solve_rect(const RectGeom& r, double beta, const FdConfig& cfg = {});
FdResult fd_solve_ellipse(const EllipseGeom& g, double beta, const FdConfig& cfg = {});

FdGrid fd_grid_rect(const RectGeom& r, double beta, int nx, int ny);
FdGrid fd_grid_ellipse(const EllipseGeom& g, double beta, int nx, int ny);

}  // namespace slipflow
