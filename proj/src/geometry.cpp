#include "slipflow/geometry.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "slipflow/errors.hpp"
#include "slipflow/quadrature.hpp"
#include "slipflow/specfun.hpp"

namespace slipflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr int kMaxOrder = 8;

// The edge recurrences divide by e^2 at every step; below this the
// moments are taken from a periodic trapezoid rule instead.
constexpr double kRecurrenceMinE2 = 0.25;

using JTable = std::array<std::array<double, kMaxOrder + 1>, kMaxOrder + 1>;

// j(m,n) = (1/2) int_0^{2pi} cos^2m sin^2n sqrt(1 - e^2 cos^2) dt
JTable j_by_quadrature(double e2) {
  JTable j{};
  for (int m = 0; m <= kMaxOrder; ++m)
    for (int n = 0; m + n <= kMaxOrder; ++n)
      j[m][n] = 0.5 * trapezoid_periodic(
          [&](double t) {
            double c = std::cos(t), s = std::sin(t);
            return std::pow(c * c, m) * std::pow(s * s, n) * std::sqrt(1.0 - e2 * c * c);
          },
          0.0, 2.0 * kPi, 512);
  return j;
}

JTable j_by_recurrence(const EllipseGeom& g) {
  const double e2 = g.e2, E = g.E, K = g.K;
  std::array<double, kMaxOrder + 2> u{}, v{};
  u[0] = 2.0 * E;
  u[1] = 2.0 * ((2.0 * e2 - 1.0) * E + (1.0 - e2) * K) / (3.0 * e2);
  for (int m = 1; m < kMaxOrder; ++m)
    u[m + 1] = (((2 * m + 2) * e2 + 2 * m) * u[m] - (2 * m - 1) * u[m - 1]) /
               ((2 * m + 3) * e2);
  v[0] = u[0];
  v[1] = u[0] - u[1];
  for (int m = 1; m < kMaxOrder; ++m)
    v[m + 1] = ((2 * m - 1) * (1.0 - e2) * v[m - 1] + 2.0 * ((2 * m + 1) * e2 - m) * v[m]) /
               ((2 * m + 3) * e2);
  JTable j{};
  for (int m = 0; m <= kMaxOrder; ++m) j[m][0] = u[m];
  for (int n = 0; n <= kMaxOrder; ++n) j[0][n] = v[n];
  // j(m+1,n) = j(m,n) - j(m,n+1)
  for (int m = 0; m < kMaxOrder; ++m)
    for (int n = 1; m + 1 + n <= kMaxOrder; ++n) j[m + 1][n] = j[m][n] - j[m][n + 1];
  return j;
}

}  // namespace

EllipseGeom ellipse_from_aspect(double a) {
  if (!(a >= 1.0) || !std::isfinite(a))
    throw DomainError("ellipse_from_aspect needs finite a >= 1 (swap axes), got " +
                      std::to_string(a));
  EllipseGeom g;
  g.a = a;
  g.b = 1.0 / a;
  if (a == 1.0) {
    g.is_circle = true;
    g.eta0 = g.q = g.q2 = std::numeric_limits<double>::infinity();
    g.K = g.E = kPi / 2.0;
    return g;
  }
  double kp = 1.0 / (a * a);  // b/a
  g.e2 = (1.0 - kp) * (1.0 + kp);
  g.e = std::sqrt(g.e2);
  g.c = std::sqrt((a - g.b) * (a + g.b));
  g.eta0 = std::atanh(kp);
  g.q = 1.0 / g.e2;
  g.q2 = (1.0 + kp * kp) / g.e2;
  EllipticPair ke = elliptic_pair_complement(kp);
  g.K = ke.K;
  g.E = ke.E;
  return g;
}

RectGeom make_rect(double a, double b) {
  if (!(a > 0.0 && b > 0.0) || !std::isfinite(a) || !std::isfinite(b))
    throw DomainError("rectangle half-sides must be positive and finite");
  return RectGeom{a, b};
}

double perimeter(const EllipseGeom& g) {
  if (g.is_circle) return 2.0 * kPi;
  return 4.0 * g.a * g.E;
}

double boundary_moment(const EllipseGeom& g, int m, int n) {
  if (m < 0 || n < 0 || m + n > kMaxOrder)
    throw DomainError("boundary_moment supports m,n >= 0 with m+n <= 8");
  JTable j = g.e2 >= kRecurrenceMinE2 ? j_by_recurrence(g) : j_by_quadrature(g.e2);
  return 2.0 * std::pow(g.a, 2 * (m - n) + 1) * j[m][n];
}

MomentSet moment_set(const EllipseGeom& g) {
  MomentSet s;
  const double a = g.a;
  s.A = kPi;
  s.P = perimeter(g);
  s.Ixx = kPi * a * a / 4.0;
  s.Iyy = kPi / (4.0 * a * a);
  JTable j = g.e2 >= kRecurrenceMinE2 ? j_by_recurrence(g) : j_by_quadrature(g.e2);
  auto mom = [&](int m, int n) { return 2.0 * std::pow(a, 2 * (m - n) + 1) * j[m][n]; };
  s.ixx = mom(1, 0);
  s.iyy = mom(0, 1);
  s.ixxxx = mom(2, 0);
  s.iyyyy = mom(0, 2);
  s.ixxyy = mom(1, 1);
  const double a4 = a * a * a * a;
  s.i2 = 4.0 / (3.0 * a) * ((1.0 + a4) * g.E + g.K);
  s.i4 = 4.0 / (5.0 * a * a * a) * ((1.0 - a4 + a4 * a4) * g.E + 2.0 * (1.0 + a4) * g.K);
  if (g.is_circle) {
    s.C1 = 0.0;
    s.C2 = kPi;  // int cos^2(2t) dt; see README on the circle limit
    return s;
  }
  const double d = a4 - 1.0;
  if (d >= 0.1) {
    s.C1 = (-2.0 * a * a * s.P + (1.0 + a4) * s.i2) / d;
    s.C2 = (4.0 * a4 * s.P - 4.0 * a * a * (1.0 + a4) * s.i2 + (1.0 + a4) * (1.0 + a4) * s.i4) /
           (d * d);
  } else {
    // the closed forms are 0/0 as a -> 1
    s.C1 = s.ixx - s.iyy;
    s.C2 = s.ixxxx - 2.0 * s.ixxyy + s.iyyyy;
  }
  return s;
}

MomentSet moment_set(const RectGeom& r) {
  const double a = r.a, b = r.b;
  MomentSet s;
  s.A = 4.0 * a * b;
  s.P = 4.0 * (a + b);
  s.Ixx = 4.0 * a * a * a * b / 3.0;
  s.Iyy = 4.0 * a * b * b * b / 3.0;
  s.ixx = 4.0 * a * a * b + 4.0 * a * a * a / 3.0;
  s.iyy = 4.0 * b * b * a + 4.0 * b * b * b / 3.0;
  s.ixxxx = 4.0 * std::pow(a, 4) * b + 4.0 * std::pow(a, 5) / 5.0;
  s.iyyyy = 4.0 * std::pow(b, 4) * a + 4.0 * std::pow(b, 5) / 5.0;
  s.ixxyy = 4.0 * a * a * b * b * b / 3.0 + 4.0 * a * a * a * b * b / 3.0;
  s.i2 = s.ixx + s.iyy;
  s.i4 = s.ixxxx + 2.0 * s.ixxyy + s.iyyyy;
  s.C1 = s.ixx - s.iyy;
  s.C2 = s.ixxxx - 2.0 * s.ixxyy + s.iyyyy;
  return s;
}

}  // namespace slipflow
