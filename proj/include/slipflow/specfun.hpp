#pragma once

namespace slipflow {

struct EllipticPair {
  double k = 0.0;
  double K = 0.0;
  double E = 0.0;
};

/// Complete elliptic integral of the first kind, modulus convention K(k).
/// Throws DomainError unless 0 <= k < 1.
double elliptic_k(double k);

/// Complete elliptic integral of the second kind. Throws unless 0 <= k <= 1.
double elliptic_e(double k);

/// Both integrals from one AGM run.
EllipticPair elliptic_pair(double k);

/// Same, parameterized by the complementary modulus k' = sqrt(1-k^2).
/// Accurate when k is close to 1 and k' is known exactly (thin ellipses).
EllipticPair elliptic_pair_complement(double kp);

struct ToroidalValue {
  double value = 0.0;
  double error_estimate = 0.0;  // absolute, from forward error propagation
  bool accurate = true;         // false once more than 6 digits are lost
};

/// Q^mu_{n-1/2}(q2) for mu in {0,-1}, n any integer (Q_{-n-1/2} = Q_{n-1/2}).
/// mu = -1 uses (z Q_{n-1/2} - Q_{n-3/2}) / ((n+1/2) sqrt(z^2-1)).
ToroidalValue toroidal_q(int n, int mu, double q2);

/// Q^{-1}_{n-1/2} through (Q_{n+1/2} - Q_{n-3/2}) / (2n sqrt(z^2-1)), n != 0.
ToroidalValue toroidal_q_minus1_alt(int n, double q2);

}  // namespace slipflow
