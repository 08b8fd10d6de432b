#include <complex>
#include "slipflow/fourier_coeffs.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "slipflow/errors.hpp"
#include "slipflow/quadrature.hpp"

namespace slipflow {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kMonitorTol = 1e-8;

double radicand(const EllipseGeom& geom, double psi) {
  // 1 - e^2 cos^2 = b^4 + e^2 sin^2, no cancellation near psi = 0
  double s = std::sin(psi);
  double kp = geom.b * geom.b;
  return kp * kp + geom.e2 * s * s;
}

}  // namespace

double g_pointwise(const EllipseGeom& geom, double psi) {
  if (geom.is_circle) return 1.0;
  return 1.0 / std::sqrt(radicand(geom, psi));
}

double ghat_pointwise(const EllipseGeom& geom, double psi) {
  if (geom.is_circle) return 1.0;
  return std::sqrt(radicand(geom, psi));
}

std::vector<double> coeffs_by_quadrature(const EllipseGeom& geom, CoeffKind kind,
                                         int lo, int hi) {
  static const GaussRule rule = gauss_legendre(20);
  const int count = hi - lo + 1;
  if (count <= 0) return {};
  auto f = [&](double psi) {
    return kind == CoeffKind::G ? g_pointwise(geom, psi) : ghat_pointwise(geom, psi);
  };
  // Symmetry about pi/2 halves the range: f_n = (4/pi) int_0^{pi/2}.
  auto pass = [&](int panels) {
    std::vector<double> out(count, 0.0);
    double h = 0.5 * kPi / panels;
    for (int p = 0; p < panels; ++p) {
      double mid = (p + 0.5) * h;
      for (std::size_t i = 0; i < rule.x.size(); ++i) {
        double psi = mid + 0.5 * h * rule.x[i];
        double w = 0.5 * h * rule.w[i] * f(psi);
        // cos(2n psi) by complex rotation, restarted exactly every 64 terms;
        // the Chebyshev recurrence loses n*eps/sin(2psi) near the peak at 0
        const std::complex<double> rot = std::polar(1.0, 2.0 * psi);
        std::complex<double> z;
        for (int k = 0; k < count; ++k) {
          if (k % 64 == 0) z = std::polar(1.0, 2.0 * (lo + k) * psi);
          out[k] += w * z.real();
          z *= rot;
        }
      }
    }
    for (double& v : out) v *= 4.0 / kPi;
    return out;
  };
  // Absolute floor at f_0: a peaked integrand leaves summation noise near 1e-13 f_0.
  double scale = (kind == CoeffKind::G ? (4.0 / kPi) * geom.K : (4.0 / kPi) * geom.E);
  int panels = 4;
  std::vector<double> prev = pass(panels);
  for (;;) {
    panels *= 2;
    std::vector<double> cur = pass(panels);
    bool done = true;
    for (int k = 0; k < count && done; ++k)
      done = std::abs(cur[k] - prev[k]) <= 1e-12 * std::max(std::abs(cur[k]), scale);
    if (done || panels >= (1 << 15)) {
      if (!done) throw NumericalError("Fourier coefficient quadrature did not converge");
      return cur;
    }
    prev.swap(cur);
  }
}

FourierCoeffs coeffs(const EllipseGeom& geom, CoeffKind kind, int N) {
  if (N < 1) throw DomainError("coeffs needs N >= 1");
  FourierCoeffs fc;
  fc.kind = kind;
  fc.N = N;
  fc.geom = geom;
  fc.values.assign(N + 1, 0.0);
  fc.quadrature_from = N + 1;
  if (geom.is_circle) {
    fc.values[0] = 2.0;
    return fc;
  }
  const double q = geom.q, q2 = geom.q2, K = geom.K, E = geom.E;
  std::vector<double> v(N + 1), err(N + 1);
  double alpha;
  if (kind == CoeffKind::G) {
    alpha = 0.5;
    v[0] = 4.0 / kPi * K;
    double t1 = -2.0 * q * E, t2 = q2 * K;
    v[1] = 4.0 / kPi * (t1 + t2);
    err[0] = 4.0 * kEps * std::abs(v[0]);
    err[1] = 4.0 * kEps * 4.0 / kPi * (std::abs(t1) + std::abs(t2));
  } else {
    alpha = 1.5;
    v[0] = 4.0 / kPi * E;
    double t1 = -q2 * E, t2 = (q2 - 1.0) * K;
    v[1] = 4.0 / (3.0 * kPi) * (t1 + t2);
    err[0] = 4.0 * kEps * std::abs(v[0]);
    err[1] = 4.0 * kEps * 4.0 / (3.0 * kPi) * (std::abs(t1) + std::abs(t2));
  }
  err[1] = std::max(err[1], err[0]);
  int bad = N + 1;
  for (int n = 0; n <= std::min(N, 1); ++n)
    if (err[n] > kMonitorTol * std::abs(v[n])) { bad = n; break; }
  // (m+alpha) f_{m+1} = 2 q2 m f_m - (m-alpha) f_{m-1}
  for (int m = 1; m < N && bad == N + 1; ++m) {
    double A = 2.0 * q2 * m, B = m - alpha, D = m + alpha;
    v[m + 1] = (A * v[m] - B * v[m - 1]) / D;
    err[m + 1] = std::max(0.0, (A * err[m] - B * err[m - 1]) / D) +
                 kEps * (std::abs(A * v[m]) + std::abs(B * v[m - 1])) / D;
    err[m + 1] = std::max(err[m + 1], err[m]);
    if (err[m + 1] > kMonitorTol * std::abs(v[m + 1])) bad = m + 1;
  }
  for (int n = 0; n < bad && n <= N; ++n) fc.values[n] = v[n];
  if (bad <= N) {
    std::vector<double> tail = coeffs_by_quadrature(geom, kind, bad, N);
    std::copy(tail.begin(), tail.end(), fc.values.begin() + bad);
    fc.method = CoeffMethod::QUADRATURE;
    fc.quadrature_from = bad;
  }
  return fc;
}

CrossCheckReport cross_checks(const FourierCoeffs& g, const FourierCoeffs& ghat) {
  if (g.kind != CoeffKind::G || ghat.kind != CoeffKind::GHAT)
    throw ContractError("cross_checks expects (G, GHAT) coefficient sets");
  if (g.geom.a != ghat.geom.a || g.N != ghat.N)
    throw ContractError("cross_checks: coefficient sets differ in geometry or N");
  CrossCheckReport r;
  for (int n = std::min(g.quadrature_from, ghat.quadrature_from); n <= g.N; ++n)
    r.quadrature_indices.push_back(n);
  if (g.geom.is_circle) return r;
  const double q = g.geom.q;
  const auto& G = g.values;
  const auto& H = ghat.values;
  for (int n = 1; n < g.N; ++n) {
    r.cross0 = std::max(r.cross0, std::abs(4 * q * H[n] - (2 * (2 * q - 1) * G[n] - G[n + 1] - G[n - 1])));
    r.cross1 = std::max(r.cross1, std::abs(G[n + 1] - ((2 * q - 1) * G[n] + (4.0 * n - 2) * q * H[n])));
    r.cross1a2 = std::max(r.cross1a2, std::abs(G[n - 1] - ((2 * q - 1) * G[n] - (4.0 * n + 2) * q * H[n])));
    r.cross2 = std::max(r.cross2, std::abs(8.0 * n * q * H[n] - (G[n + 1] - G[n - 1])));
  }
  return r;
}

}  // namespace slipflow
