#include "slipflow/rectangle.hpp"

#include <cmath>
#include <numbers>

#include "slipflow/errors.hpp"

namespace slipflow {

namespace {
constexpr double kPi = std::numbers::pi;
}

SeriesValue q0_rect(const RectGeom& r, int terms) {
  if (terms < 1) throw DomainError("q0_rect needs at least one term");
  const double a = r.a, b = r.b;
  const double pref = 4.0 * a * a * a * b / 3.0;
  const double c = 192.0 / std::pow(kPi, 5) * (a / b);
  double s = 0.0;
  for (int n = terms; n >= 1; --n) {
    double k = 2.0 * n - 1.0;
    s += std::tanh(kPi * k * b / (2.0 * a)) / std::pow(k, 5);
  }
  SeriesValue v;
  v.value = pref * (1.0 - c * s);
  // sum_{n>T} (2n-1)^-5 <= int_T^inf (2x-1)^-5 dx = (2T-1)^-4 / 8
  v.tail_bound = pref * c * std::pow(2.0 * terms - 1.0, -4) / 8.0;
  return v;
}

RectSigma sigma_rect(const RectGeom& r) {
  const double a = r.a, b = r.b, s = a + b;
  RectSigma out;
  out.sigma_inf = 8.0 * a * a * a * b * b * b / (3.0 * s * s);
  double poly = std::pow(a, 4) + 6.0 * b * a * a * a - 10.0 * a * a * b * b + 6.0 * a * b * b * b +
                std::pow(b, 4);
  out.sigma_1 = -4.0 / 45.0 * a * a * b * b * poly / (s * s * s);
  return out;
}

double uinf_rect(const RectGeom& r, double x, double y) {
  const double a = r.a, b = r.b;
  if (std::abs(x) > a * (1.0 + 1e-14) || std::abs(y) > b * (1.0 + 1e-14))
    throw DomainError("point lies outside the rectangle");
  return a * b * (a * a + 6.0 * a * b + b * b) / (6.0 * (a + b) * (a + b)) -
         (b * x * x + a * y * y) / (2.0 * (a + b));
}

FlowEstimate quad_lb_rect(const RectGeom& r, double beta) {
  if (beta < 0.0) throw DomainError("slip length must be nonnegative");
  const double a = r.a, b = r.b, t = beta;
  double num = 4.0 * a * a * b * b * t * (15.0 * a * t + b * b + 5.0 * a * b) *
               (5.0 * a * b + a * a + 15.0 * b * t);
  double den = 3.0 * (30.0 * a * b * b * b * t + 5.0 * std::pow(b, 4) * t +
                      30.0 * a * a * a * b * t + 5.0 * std::pow(a, 4) * t +
                      75.0 * a * a * b * t * t + 75.0 * a * b * b * t * t +
                      2.0 * a * a * b * b * b + 2.0 * a * a * a * b * b);
  return {Method::QUAD_VARL, num / den, BoundKind::LOWER};
}

FlowEstimate r_bound_rect(const RectGeom& r, double beta) {
  RectSigma s = sigma_rect(r);
  double A = 4.0 * r.a * r.b, P = 4.0 * (r.a + r.b);
  return r_bound(A, P, q0_rect(r).value, s.sigma_inf, s.sigma_1, beta);
}

}  // namespace slipflow
