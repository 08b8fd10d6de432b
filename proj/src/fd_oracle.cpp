#include "slipflow/fd_oracle.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseCholesky>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <string>

#include "slipflow/errors.hpp"
#include "slipflow/fourier_coeffs.hpp"

namespace slipflow {

namespace {

constexpr double kPi = std::numbers::pi;

// Boundary closure on the far side of a coordinate: Neumann, or Robin
// u + kappa du/dn = 0 (kappa = 0 meaning Dirichlet).
struct FarSide {
  bool robin = false;
  std::function<double(double)> kappa;  // of the tangential coordinate
};

// -Lap u = f on [0,X]x[0,Y], Neumann at x = 0 and y = 0. Rows are scaled by
// the trapezoid weights, which makes the ghost-point system symmetric.
FdGrid solve_quarter(double X, double Y, int nx, int ny,
                     const std::function<double(double, double)>& f, const FarSide& sx,
                     const FarSide& sy) {
  const double hx = X / nx, hy = Y / ny;
  const int mx = nx + 1, my = ny + 1;
  auto id = [my](int i, int j) { return i * my + j; };
  auto wx = [nx](int i) { return (i == 0 || i == nx) ? 0.5 : 1.0; };
  auto wy = [ny](int j) { return (j == 0 || j == ny) ? 0.5 : 1.0; };

  std::vector<char> fixed(static_cast<std::size_t>(mx) * my, 0);
  std::vector<double> diag(fixed.size(), 0.0);
  if (sx.robin)
    for (int j = 0; j <= ny; ++j) {
      double k = sx.kappa(j * hy);
      if (k == 0.0) fixed[id(nx, j)] = 1;
      else diag[id(nx, j)] += wy(j) / (hx * k);
    }
  if (sy.robin)
    for (int i = 0; i <= nx; ++i) {
      double k = sy.kappa(i * hx);
      if (k == 0.0) fixed[id(i, ny)] = 1;
      else diag[id(i, ny)] += wx(i) / (hy * k);
    }

  std::vector<Eigen::Triplet<double>> trip;
  trip.reserve(fixed.size() * 5);
  auto edge = [&](int p, int q, double w) {
    if (!fixed[p]) trip.emplace_back(p, p, w);
    if (!fixed[q]) trip.emplace_back(q, q, w);
    if (!fixed[p] && !fixed[q]) {
      trip.emplace_back(p, q, -w);
      trip.emplace_back(q, p, -w);
    }
  };
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j <= ny; ++j) edge(id(i, j), id(i + 1, j), wy(j) / (hx * hx));
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j < ny; ++j) edge(id(i, j), id(i, j + 1), wx(i) / (hy * hy));
  Eigen::VectorXd rhs(fixed.size());
  for (int i = 0; i <= nx; ++i)
    for (int j = 0; j <= ny; ++j) {
      int p = id(i, j);
      if (fixed[p]) {
        trip.emplace_back(p, p, 1.0);
        rhs(p) = 0.0;
      } else {
        if (diag[p] != 0.0) trip.emplace_back(p, p, diag[p]);
        rhs(p) = wx(i) * wy(j) * f(i * hx, j * hy);
      }
    }
  Eigen::SparseMatrix<double> A(static_cast<long>(fixed.size()), static_cast<long>(fixed.size()));
  A.setFromTriplets(trip.begin(), trip.end());
  Eigen::SimplicialLDLT<Eigen::SparseMatrix<double>> ldlt(A);
  if (ldlt.info() != Eigen::Success)
    throw NumericalError("FD factorization failed on " + std::to_string(nx) + "x" +
                         std::to_string(ny) + " grid");
  Eigen::VectorXd u = ldlt.solve(rhs);
  if (ldlt.info() != Eigen::Success || !u.allFinite())
    throw NumericalError("FD solve failed on " + std::to_string(nx) + "x" + std::to_string(ny) +
                         " grid");
  FdGrid g;
  g.nx = nx;
  g.ny = ny;
  g.hx = hx;
  g.hy = hy;
  g.u.assign(u.data(), u.data() + u.size());
  return g;
}

double integrate(const FdGrid& g, const std::function<double(double, double)>& jac) {
  double s = 0.0;
  for (int i = 0; i <= g.nx; ++i)
    for (int j = 0; j <= g.ny; ++j) {
      double w = ((i == 0 || i == g.nx) ? 0.5 : 1.0) * ((j == 0 || j == g.ny) ? 0.5 : 1.0);
      s += w * g.at(i, j) * jac(i * g.hx, j * g.hy);
    }
  return 4.0 * s * g.hx * g.hy;
}

void check_config(const FdConfig& cfg) {
  if (cfg.nx < 16 || cfg.ny < 16) throw DomainError("FD grid needs nx, ny >= 16");
  if (cfg.refine_levels < 1 || cfg.refine_levels > 3)
    throw DomainError("FD refine_levels must be 1, 2 or 3");
}

FdResult richardson(const FdConfig& cfg, const std::function<double(int, int)>& level) {
  check_config(cfg);
  FdResult r;
  for (int k = 0; k <= cfg.refine_levels; ++k)
    r.level_Q.push_back(level(cfg.nx << k, cfg.ny << k));
  const auto& Q = r.level_Q;
  const std::size_t L = Q.size() - 1;
  r.Q = Q[L];
  r.error_estimate = std::abs(Q[L] - Q[L - 1]) / 3.0;
  r.Q_extrapolated = Q[L] + (Q[L] - Q[L - 1]) / 3.0;
  r.observed_order = L >= 2 ? std::log2(std::abs(Q[L - 1] - Q[L - 2]) / std::abs(Q[L] - Q[L - 1]))
                            : std::numeric_limits<double>::quiet_NaN();
  return r;
}

}  // namespace

FdGrid fd_grid_rect(const RectGeom& r, double beta, int nx, int ny) {
  if (beta < 0.0) throw DomainError("slip length must be nonnegative");
  FarSide side{true, [beta](double) { return beta; }};
  return solve_quarter(r.a, r.b, nx, ny, [](double, double) { return 1.0; }, side, side);
}

FdGrid fd_grid_ellipse(const EllipseGeom& g, double beta, int nx, int ny) {
  if (g.is_circle) throw DomainError("FD oracle: the circle has a closed form");
  if (g.eta0 > 6.0) throw DomainError("FD oracle: eta0 > 6, use near-circular path");
  if (beta < 0.0) throw DomainError("slip length must be nonnegative");
  const double c2 = g.c * g.c, kappa = beta / g.a;
  FarSide sx{true, [&g, kappa](double psi) { return kappa * g_pointwise(g, psi); }};
  FarSide sy{false, {}};
  auto f = [c2](double eta, double psi) {
    double ch = std::cosh(eta), cs = std::cos(psi);
    return c2 * (ch * ch - cs * cs);
  };
  return solve_quarter(g.eta0, 0.5 * kPi, nx, ny, f, sx, sy);
}

FdResult fd_solve_rect(const RectGeom& r, double beta, const FdConfig& cfg) {
  return richardson(cfg, [&](int nx, int ny) {
    return integrate(fd_grid_rect(r, beta, nx, ny), [](double, double) { return 1.0; });
  });
}

FdResult fd_solve_ellipse(const EllipseGeom& g, double beta, const FdConfig& cfg) {
  const double c2 = g.c * g.c;
  return richardson(cfg, [&](int nx, int ny) {
    return integrate(fd_grid_ellipse(g, beta, nx, ny), [c2](double eta, double psi) {
      double ch = std::cosh(eta), cs = std::cos(psi);
      return c2 * (ch * ch - cs * cs);
    });
  });
}

}  // namespace slipflow
