#pragma once

#include <span>

namespace slipflow {

/// Published values: A = asymptotic formula, V = quadratic variational
/// bound, F = truncated Fourier series.
struct TableRow {
  double a;
  double beta;
  double A;
  double V;
  double F;
};

/// Comparison with the Ritz method, ellipse with semi-axes 1 and c.
struct RitzRow {
  double lambda;
  double c;
  double A;
  double V;
  double F;
  double ritz;
};

std::span<const TableRow> near_circular_table();
std::span<const TableRow> small_beta_table();
std::span<const TableRow> large_beta_table();
std::span<const RitzRow> ritz_table();

/// Entries of the published F column that disagree with the converged
/// series by far more than the printed precision, for a = 65/64.
bool f_entry_unreliable(double a, double beta);

}  // namespace slipflow
