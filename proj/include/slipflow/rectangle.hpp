#pragma once

#include "slipflow/bounds.hpp"
#include "slipflow/geometry.hpp"

namespace slipflow {

inline constexpr int kDefaultRectTerms = 40;

struct SeriesValue {
  double value = 0.0;
  double tail_bound = 0.0;
};

/// Q at beta = 0 for (-a,a)x(-b,b), truncated sine-series sum.
SeriesValue q0_rect(const RectGeom& r, int terms = kDefaultRectTerms);

struct RectSigma {
  double sigma_inf = 0.0;
  double sigma_1 = 0.0;
};
RectSigma sigma_rect(const RectGeom& r);

double uinf_rect(const RectGeom& r, double x, double y);

FlowEstimate quad_lb_rect(const RectGeom& r, double beta);

/// R(beta) for the rectangle from the series Q0 and closed-form sigmas.
FlowEstimate r_bound_rect(const RectGeom& r, double beta);

}  // namespace slipflow
