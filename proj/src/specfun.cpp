#include "slipflow/specfun.hpp"

#include <cmath>
#include <cstdlib>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "slipflow/errors.hpp"

namespace slipflow {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kPi = std::numbers::pi;

// AGM with a0 = 1, b0 = k'. E/K = 1 - sum 2^(n-1) c_n^2, c_0 = k.
EllipticPair agm_pair(double k, double kp) {
  EllipticPair r;
  r.k = k;
  if (kp == 0.0) {
    r.K = std::numeric_limits<double>::infinity();
    r.E = 1.0;
    return r;
  }
  double a = 1.0, b = kp;
  double k2 = (1.0 - kp) * (1.0 + kp);
  double weight = 0.5;
  double sum = weight * k2;
  for (int it = 0; it < 64 && std::abs(a - b) > kEps * a; ++it) {
    double c = 0.5 * (a - b);
    double an = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = an;
    weight *= 2.0;
    sum += weight * c * c;
  }
  r.K = kPi / (2.0 * a);
  r.E = r.K * (1.0 - sum);
  return r;
}

struct Seq {
  std::vector<double> u;    // u[m] = Q_{m-1/2}
  std::vector<double> err;  // propagated absolute error bound
};

// Forward RE(1/2) from the elliptic-integral seeds. The error companion
// sequence obeys the same recurrence (clamped to stay nonnegative) so it
// grows like the dominant solution, plus fresh rounding at each step.
Seq forward(int nmax, double q2) {
  if (!(q2 > 1.0) || !std::isfinite(q2))
    throw DomainError("toroidal_q: q2 must exceed 1, got " + std::to_string(q2));
  double q = 0.5 * (q2 + 1.0);
  double sq = std::sqrt(q);
  double kp = std::sqrt(0.5 * (q2 - 1.0) / q);
  EllipticPair ke = elliptic_pair_complement(kp);
  Seq s;
  int len = std::max(nmax, 1) + 1;
  s.u.resize(len);
  s.err.resize(len);
  s.u[0] = ke.K / sq;
  double t1 = q2 * ke.K / sq, t2 = 2.0 * sq * ke.E;
  s.u[1] = t1 - t2;
  s.err[0] = 4.0 * kEps * std::abs(s.u[0]);
  s.err[1] = std::max(4.0 * kEps * (std::abs(t1) + std::abs(t2)), q2 * s.err[0]);
  for (int m = 1; m + 1 < len; ++m) {
    double A = 2.0 * q2 * m, B = m - 0.5, D = m + 0.5;
    s.u[m + 1] = (A * s.u[m] - B * s.u[m - 1]) / D;
    double grow = std::max(0.0, (A * s.err[m] - B * s.err[m - 1]) / D);
    s.err[m + 1] = grow + kEps * (std::abs(A * s.u[m]) + std::abs(B * s.u[m - 1])) / D;
  }
  return s;
}

bool digits_ok(double err, double value) {
  return err <= 1e6 * kEps * std::abs(value);
}

}  // namespace

EllipticPair elliptic_pair(double k) {
  if (!(k >= 0.0 && k <= 1.0))
    throw DomainError("elliptic modulus outside [0,1]: " + std::to_string(k));
  return agm_pair(k, std::sqrt((1.0 - k) * (1.0 + k)));
}

EllipticPair elliptic_pair_complement(double kp) {
  if (!(kp >= 0.0 && kp <= 1.0))
    throw DomainError("complementary modulus outside [0,1]: " + std::to_string(kp));
  return agm_pair(std::sqrt((1.0 - kp) * (1.0 + kp)), kp);
}

double elliptic_k(double k) {
  if (!(k >= 0.0 && k < 1.0))
    throw DomainError("elliptic_k needs 0 <= k < 1, got " + std::to_string(k));
  return elliptic_pair(k).K;
}

double elliptic_e(double k) {
  if (k == 1.0) return 1.0;
  return elliptic_pair(k).E;
}

ToroidalValue toroidal_q(int n, int mu, double q2) {
  if (mu != 0 && mu != -1)
    throw DomainError("toroidal_q: order must be 0 or -1");
  n = std::abs(n);
  ToroidalValue r;
  if (mu == 0) {
    Seq s = forward(n, q2);
    r.value = s.u[n];
    r.error_estimate = s.err[n];
  } else {
    Seq s = forward(n + 1, q2);
    double um1 = n == 0 ? s.u[1] : s.u[n - 1];
    double em1 = n == 0 ? s.err[1] : s.err[n - 1];
    double den = (n + 0.5) * std::sqrt((q2 - 1.0) * (q2 + 1.0));
    r.value = (q2 * s.u[n] - um1) / den;
    r.error_estimate = (q2 * s.err[n] + em1 +
                        kEps * (std::abs(q2 * s.u[n]) + std::abs(um1))) / den;
  }
  r.accurate = digits_ok(r.error_estimate, r.value);
  return r;
}

ToroidalValue toroidal_q_minus1_alt(int n, double q2) {
  n = std::abs(n);
  if (n == 0) throw DomainError("toroidal_q_minus1_alt undefined at n=0");
  Seq s = forward(n + 1, q2);
  double den = 2.0 * n * std::sqrt((q2 - 1.0) * (q2 + 1.0));
  ToroidalValue r;
  r.value = (s.u[n + 1] - s.u[n - 1]) / den;
  r.error_estimate = (s.err[n + 1] + s.err[n - 1] +
                      kEps * (std::abs(s.u[n + 1]) + std::abs(s.u[n - 1]))) / den;
  r.accurate = digits_ok(r.error_estimate, r.value);
  return r;
}

}  // namespace slipflow
