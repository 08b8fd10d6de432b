#include "doctest.h"

#include <cmath>
#include <numbers>

#include "slipflow/bounds.hpp"
#include "slipflow/errors.hpp"
#include "slipflow/fourier_coeffs.hpp"
#include "slipflow/geometry.hpp"
#include "slipflow/quadrature.hpp"
#include "slipflow/robin_solver.hpp"

using namespace slipflow;
using std::numbers::pi;

namespace {

const double kBetas[] = {1.0 / 64, 1.0 / 16, 0.25, 1.0, 4.0, 16.0, 64.0};

// int_0^{2pi} F(psi) dpsi by the periodic trapezoid; F is smooth and periodic
template <class F>
double ring(F f, int pts = 4096) {
  return trapezoid_periodic(f, 0.0, 2 * pi, pts);
}

// Q = c^2 int int u (cosh^2 eta - cos^2 psi) over eta in [0, eta0], psi in [0, 2 pi]
double area_flow(const RobinSolution& s) {
  const auto& g = s.geom;
  auto rule = gauss_legendre(40);
  double total = 0.0;
  const int panels = 8;
  for (int p = 0; p < panels; ++p) {
    double lo = g.eta0 * p / panels, h = g.eta0 / panels;
    for (std::size_t i = 0; i < rule.x.size(); ++i) {
      double eta = lo + 0.5 * h * (rule.x[i] + 1);
      double ch = std::cosh(eta);
      double line = ring([&](double psi) {
        double cp = std::cos(psi);
        return eval_u(s, eta, psi) * (ch * ch - cp * cp);
      }, 256);
      total += 0.5 * h * rule.w[i] * line;
    }
  }
  return g.c * g.c * total;
}

}  // namespace

TEST_CASE("no-slip closed form") {
  for (double a : {1.25, 2.0, 4.0}) {
    auto g = ellipse_from_aspect(a);
    auto s = solve(g, 0.0, 16);
    double s2 = std::sinh(2 * g.eta0), c2 = std::cosh(2 * g.eta0);
    CHECK(s.Ahat[0] == doctest::Approx(c2 / (4 * s2)).epsilon(1e-13));
    // Ahat_1 = A_1 cosh(2 eta0)
    CHECK(s.Ahat[1] == doctest::Approx(1 / (4 * s2)).epsilon(1e-13));
    for (int n = 2; n <= 16; ++n) CHECK(std::abs(s.Ahat[n]) < 1e-12);
    // semi-axes a, 1/a: Q0 = pi a^3 b^3 / (4 (a^2 + b^2))
    double b = 1 / a;
    CHECK(flow_rate(s) == doctest::Approx(pi * std::pow(a * b, 3) / (4 * (a * a + b * b)))
                              .epsilon(1e-13));
  }
  CHECK(flow_rate(solve(ellipse_from_aspect(1.0), 0.0)) == doctest::Approx(pi / 8));
}

TEST_CASE("circle") {
  auto c = ellipse_from_aspect(1.0);
  for (double beta : {0.0, 0.25, 4.0}) {
    auto s = solve(c, beta);
    CHECK(s.Ahat[0] == doctest::Approx(0.25 + beta / 2));
    CHECK(flow_rate(s) == doctest::Approx(pi * (1 + 4 * beta) / 8).epsilon(1e-15));
    for (double r : {0.0, 0.3, 0.9, 1.0})
      CHECK(eval_u_xy(s, r * 0.6, r * 0.8) ==
            doctest::Approx((1 - r * r) / 4 + beta / 2).epsilon(1e-14));
  }
  CHECK(flow_rate(solve(c, 0.25)) == doctest::Approx(pi / 4));
}

TEST_CASE("assembly matches numerical projection") {
  // M_mn = int_0^{2pi} (1 + (2 n beta / a) tanh(2 n eta0) g) cos 2n psi cos 2m psi
  // rhs_m = int_0^{2pi} [(c^2/8)(cosh 2eta0 + cos 2psi) + (beta/(2a)) g] cos 2m psi
  auto g = ellipse_from_aspect(2.0);
  const double beta = 1.0;
  const int N = 4;
  auto G = coeffs(g, CoeffKind::G, 2 * N);
  auto sys = assemble(g, beta, N, G);
  for (int m = 0; m <= N; ++m) {
    for (int n = 0; n <= N; ++n) {
      double t = n == 0 ? 0.0 : std::tanh(2 * n * g.eta0);
      double ref = ring([&](double psi) {
        return (1 + 2 * n * beta / g.a * t * g_pointwise(g, psi)) * std::cos(2 * n * psi) *
               std::cos(2 * m * psi);
      });
      CHECK(std::abs(sys.matrix(m, n) - ref) < 1e-12);
    }
    double ref = ring([&](double psi) {
      return (g.c * g.c / 8 * (std::cosh(2 * g.eta0) + std::cos(2 * psi)) +
              beta / (2 * g.a) * g_pointwise(g, psi)) *
             std::cos(2 * m * psi);
    });
    CHECK(std::abs(sys.rhs(m) - ref) < 1e-12);
  }
  // beta-part symmetric once column n is divided by n tanh(2 n eta0)
  for (int m = 1; m <= N; ++m)
    for (int n = 1; n <= N; ++n) {
      double smn = (sys.matrix(m, n) - (m == n ? pi : 0.0)) / (n * std::tanh(2 * n * g.eta0));
      double snm = (sys.matrix(n, m) - (m == n ? pi : 0.0)) / (m * std::tanh(2 * m * g.eta0));
      CHECK(smn == doctest::Approx(snm).epsilon(1e-13));
    }
  CHECK_THROWS_AS(assemble(g, beta, N, coeffs(g, CoeffKind::G, 2 * N - 1)), ContractError);
  CHECK_THROWS_AS(assemble(g, beta, N, coeffs(g, CoeffKind::GHAT, 2 * N)), ContractError);
}

TEST_CASE("no-slip assembly is diagonal") {
  auto g = ellipse_from_aspect(2.0);
  auto sys = assemble(g, 0.0, 6, coeffs(g, CoeffKind::G, 12));
  CHECK(sys.matrix(0, 0) == doctest::Approx(2 * pi));
  for (int m = 0; m <= 6; ++m)
    for (int n = 0; n <= 6; ++n)
      if (m != n) CHECK(sys.matrix(m, n) == 0.0);
      else if (m > 0) CHECK(sys.matrix(m, n) == doctest::Approx(pi));
}

TEST_CASE("published flow values") {
  auto g = ellipse_from_aspect(1.25);
  CHECK(std::abs(flow_rate(solve(g, 1.0, 12)) - 1.882277797) < 1e-8);
  CHECK(std::abs(flow_rate(solve(g, 1.0 / 64, 12)) - 0.3807440330) < 1e-8);
  // semi-axes 1 and c = 1/4, slip lambda = 0.1: area-pi aspect 2, beta = 0.2, Q scales by c^2
  CHECK(std::abs(0.0625 * flow_rate(solve(ellipse_from_aspect(2.0), 0.2, 12)) - 0.0268994) <
        5e-7);
}

TEST_CASE("flow rate equals the area integral of u") {
  for (double a : {1.25, 2.0})
    for (double beta : {0.0, 0.25, 4.0}) {
      auto s = solve(ellipse_from_aspect(a), beta, 32);
      CHECK(std::abs(flow_rate(s) - area_flow(s)) < 1e-9 * std::max(1.0, flow_rate(s)));
    }
}

TEST_CASE("Robin condition holds at the boundary") {
  auto g = ellipse_from_aspect(2.0);
  auto s = solve(g, 4.0, 32);
  for (int i = 0; i <= 20; ++i) {
    double psi = pi * i / 40;
    double dn = eval_u_eta(s, g.eta0, psi) /
                (g.c * std::sqrt(std::cosh(g.eta0) * std::cosh(g.eta0) -
                                 std::cos(psi) * std::cos(psi)));
    CHECK(std::abs(eval_u(s, g.eta0, psi) + 4.0 * dn) < 1e-8);
  }
  auto d = solve(g, 0.0, 16);
  for (int i = 0; i <= 10; ++i) CHECK(std::abs(eval_u(d, g.eta0, pi * i / 10)) < 1e-9);
}

TEST_CASE("u is positive and even") {
  for (double a : {1.25, 2.0}) {
    auto g = ellipse_from_aspect(a);
    auto s = solve(g, 1.0 / 64, 32);
    double umin = 1e300;
    for (int i = 0; i < 64; ++i)
      for (int j = 0; j < 64; ++j) {
        double eta = g.eta0 * i / 63, psi = 2 * pi * j / 64;
        umin = std::min(umin, eval_u(s, eta, psi));
      }
    CHECK(umin > 0);
    for (double psi : {0.3, 1.1, 2.0}) {
      double u = eval_u(s, 0.5 * g.eta0, psi);
      CHECK(eval_u(s, 0.5 * g.eta0, -psi) == doctest::Approx(u).epsilon(1e-15));
      CHECK(eval_u(s, 0.5 * g.eta0, pi - psi) == doctest::Approx(u).epsilon(1e-14));
    }
  }
}

TEST_CASE("Cartesian evaluation matches elliptic evaluation") {
  auto g = ellipse_from_aspect(2.0);
  auto s = solve(g, 0.25, 32);
  for (double eta : {0.0, 0.1, g.eta0})
    for (double psi : {0.0, 0.4, 1.3, pi / 2}) {
      double x = g.c * std::cosh(eta) * std::cos(psi), y = g.c * std::sinh(eta) * std::sin(psi);
      auto [e2, p2] = to_elliptic(g, x, y);
      CHECK(e2 == doctest::Approx(eta).epsilon(1e-10));
      CHECK(eval_u_xy(s, x, y) == doctest::Approx(eval_u(s, eta, psi)).epsilon(1e-12));
    }
  CHECK_THROWS_AS(eval_u_xy(s, 2.5, 0.0), DomainError);
}

TEST_CASE("flow increases with slip") {
  for (double a : {1.25, 2.0, 4.0}) {
    auto g = ellipse_from_aspect(a);
    double prev = flow_rate(solve(g, 0.0, 128));
    for (double beta : kBetas) {
      double q = flow_rate(solve(g, beta, 128));
      CHECK(q > prev);
      prev = q;
    }
  }
}

TEST_CASE("truncation convergence and residual, a <= 2") {
  for (double a : {1.05, 1.25, 2.0})
    for (double beta : kBetas) {
      auto g = ellipse_from_aspect(a);
      CHECK(std::abs(flow_rate(solve(g, beta, 24)) - flow_rate(solve(g, beta, 48))) < 1e-9);
      CHECK(solve(g, beta, 32).residual_norm < 1e-8 * (1 + beta));
    }
}

// The a <= 4 claim at N = 24/32 does not hold at a = 4: modes decay like
// exp(-4 n eta0) with eta0 = 0.0626, so about 128 terms are needed.
TEST_CASE("truncation convergence at a = 4, N = 24 vs 48" * doctest::may_fail()) {
  auto g = ellipse_from_aspect(4.0);
  for (double beta : kBetas)
    CHECK(std::abs(flow_rate(solve(g, beta, 24)) - flow_rate(solve(g, beta, 48))) < 1e-9);
}

TEST_CASE("residual at a = 4, N = 32" * doctest::may_fail()) {
  auto g = ellipse_from_aspect(4.0);
  for (double beta : kBetas) CHECK(solve(g, beta, 32).residual_norm < 1e-8 * (1 + beta));
}

TEST_CASE("a = 4 converges with N = 128") {
  auto g = ellipse_from_aspect(4.0);
  for (double beta : kBetas) {
    CHECK(std::abs(flow_rate(solve(g, beta, 128)) - flow_rate(solve(g, beta, 256))) <
          1e-9 * std::max(1.0, beta));
    CHECK(solve(g, beta, 128).residual_norm < 1e-8 * (1 + beta));
  }
}

TEST_CASE("solutions lie inside the classical bounds") {
  for (double a : {1.25, 2.0}) {
    auto g = ellipse_from_aspect(a);
    auto m = moment_set(g);
    for (double beta : kBetas) {
      double q = flow_rate(solve(g, beta, 48));
      CHECK(km93_lower(m.A, m.P, q0_ellipse(g), beta).value <= q + 1e-9);
      CHECK(q <= pi * (1 + 4 * beta) / 8 + 1e-9);
    }
  }
}

TEST_CASE("argument checks") {
  auto g = ellipse_from_aspect(2.0);
  CHECK_THROWS_AS(solve(g, -1.0), DomainError);
  CHECK_THROWS_AS(solve(g, 1.0, 1), DomainError);
  CHECK(cosh_ratio(3, 0.5, 0.5) == 1.0);
  CHECK(cosh_ratio(400, 0.0, 2.0) >= 0.0);
  CHECK(cosh_ratio(2, 0.1, 0.3) == doctest::Approx(std::cosh(0.4) / std::cosh(1.2)));
}
