#pragma once

namespace slipflow {

/// Area-pi ellipse x^2/a^2 + y^2 a^2 <= 1 and its elliptic-coordinate
/// parameters. For the circle eta0, q, q2 are +inf and c = e = 0.
struct EllipseGeom {
  double a = 1.0;
  double b = 1.0;
  double c = 0.0;
  double e = 0.0;
  double e2 = 0.0;   // e^2 = 1 - a^-4, formed without cancellation
  double eta0 = 0.0;
  double q = 0.0;    // cosh^2(eta0) = 1/e^2
  double q2 = 0.0;   // 2q - 1
  double K = 0.0;    // K(e)
  double E = 0.0;    // E(e)
  bool is_circle = false;
};

struct RectGeom {
  double a = 1.0;  // half-width
  double b = 1.0;  // half-height
};

struct MomentSet {
  double A = 0.0;
  double P = 0.0;
  double Ixx = 0.0;
  double Iyy = 0.0;
  double i2 = 0.0;
  double i4 = 0.0;
  double C1 = 0.0;
  double C2 = 0.0;
  // boundary integrals of x^2, y^2, x^4, y^4, x^2 y^2
  double ixx = 0.0;
  double iyy = 0.0;
  double ixxxx = 0.0;
  double iyyyy = 0.0;
  double ixxyy = 0.0;
};

EllipseGeom ellipse_from_aspect(double a);
RectGeom make_rect(double a, double b);

double perimeter(const EllipseGeom& g);

/// Integral over the boundary of x^(2m) y^(2n) ds, m+n <= 8.
double boundary_moment(const EllipseGeom& g, int m, int n);

MomentSet moment_set(const EllipseGeom& g);
MomentSet moment_set(const RectGeom& r);

}  // namespace slipflow
