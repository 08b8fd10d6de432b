#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>
#include <vector>

namespace slipflow {

using Rational = boost::multiprecision::cpp_rational;

/// Dense polynomial in x with exact rational coefficients, c[k] * x^k.
class Poly {
public:
  Poly() = default;
  explicit Poly(std::vector<Rational> c);
  static Poly constant(const Rational& v);
  static Poly x();

  int degree() const;  // -1 for the zero polynomial
  Rational leading() const;
  Rational coeff(int k) const;
  bool is_zero() const { return c_.empty(); }
  Poly derivative() const;
  double eval(double x) const;
  std::string str() const;

  friend Poly operator+(const Poly& p, const Poly& q);
  friend Poly operator-(const Poly& p, const Poly& q);
  friend Poly operator*(const Poly& p, const Poly& q);
  friend Poly operator*(const Rational& s, const Poly& p);
  friend bool operator==(const Poly& p, const Poly& q) { return p.c_ == q.c_; }

private:
  void trim();
  std::vector<Rational> c_;
};

enum class PolyFamily { P01, P10, P01HAT, P10HAT };

/// Solutions of (n+alpha) u_{n+1} = 2 x n u_n - (n-alpha) u_{n-1},
/// alpha = 1/2 for P01/P10 and 3/2 for the hat families.
struct PolySeq {
  PolyFamily family = PolyFamily::P01;
  std::vector<Poly> polys;  // index 0..N
};

PolySeq poly_family(PolyFamily family, int N);

/// Same recurrence run backwards: element k is u_{-k}, k = 0..N.
PolySeq poly_family_negative(PolyFamily family, int N);

struct PolyIdentityReport {
  int N = 0;
  std::vector<std::string> verified;
  long checks = 0;
};

/// Exact verification of the product, leading-coefficient, linking and
/// derivative identities for indices up to N. Throws IdentityViolation.
PolyIdentityReport poly_identities(const PolySeq& p01, const PolySeq& p10,
                                   const PolySeq& p01hat, const PolySeq& p10hat);

}  // namespace slipflow
