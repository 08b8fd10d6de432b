#pragma once

#include <vector>

#include "slipflow/geometry.hpp"

namespace slipflow {

enum class CoeffKind { G, GHAT };
enum class CoeffMethod { RECURRENCE, QUADRATURE };

/// Cosine coefficients f_n = (2/pi) int_0^pi f(psi) cos(2 n psi) dpsi of
/// f = g or f = ghat = 1/g.
struct FourierCoeffs {
  CoeffKind kind = CoeffKind::G;
  std::vector<double> values;  // 0..N
  int N = 0;
  EllipseGeom geom;
  CoeffMethod method = CoeffMethod::RECURRENCE;
  int quadrature_from = 0;     // first index taken from quadrature; N+1 if none
};

/// g(psi) = 1/sqrt(1 - e^2 cos^2 psi)
double g_pointwise(const EllipseGeom& geom, double psi);
double ghat_pointwise(const EllipseGeom& geom, double psi);

/// Recurrence from elliptic-integral seeds; the tail past the first index
/// whose propagated error exceeds 1e-8 relative is recomputed by quadrature.
FourierCoeffs coeffs(const EllipseGeom& geom, CoeffKind kind, int N);

/// Coefficients n = lo..hi by composite Gauss-Legendre with panel doubling.
std::vector<double> coeffs_by_quadrature(const EllipseGeom& geom, CoeffKind kind,
                                         int lo, int hi);

struct CrossCheckReport {
  double cross0 = 0.0;    // 4q gh_n - (2(2q-1) g_n - g_{n+1} - g_{n-1})
  double cross1 = 0.0;    // g_{n+1} - ((2q-1) g_n + (4n-2) q gh_n)
  double cross1a2 = 0.0;  // g_{n-1} - ((2q-1) g_n - (4n+2) q gh_n)
  double cross2 = 0.0;    // 8 n q gh_n - (g_{n+1} - g_{n-1})
  std::vector<int> quadrature_indices;
};

CrossCheckReport cross_checks(const FourierCoeffs& g, const FourierCoeffs& ghat);

}  // namespace slipflow
