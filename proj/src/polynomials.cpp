#include "slipflow/polynomials.hpp"

#include <algorithm>
#include <sstream>

#include "slipflow/errors.hpp"

namespace slipflow {

Poly::Poly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }

Poly Poly::constant(const Rational& v) { return Poly({v}); }
Poly Poly::x() { return Poly({Rational(0), Rational(1)}); }

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::degree() const { return static_cast<int>(c_.size()) - 1; }
Rational Poly::leading() const { return c_.empty() ? Rational(0) : c_.back(); }
Rational Poly::coeff(int k) const {
  return k >= 0 && k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

Poly Poly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
  return Poly(std::move(d));
}

double Poly::eval(double x) const {
  double s = 0.0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) s = s * x + it->convert_to<double>();
  return s;
}

std::string Poly::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int k = degree(); k >= 0; --k) {
    if (c_[k] == 0) continue;
    if (!first) os << " + ";
    os << "(" << c_[k] << ")";
    if (k > 0) os << "*x^" << k;
    first = false;
  }
  return os.str();
}

Poly operator+(const Poly& p, const Poly& q) {
  std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(k) + q.coeff(k);
  return Poly(std::move(r));
}

Poly operator-(const Poly& p, const Poly& q) {
  std::vector<Rational> r(std::max(p.c_.size(), q.c_.size()));
  for (std::size_t k = 0; k < r.size(); ++k) r[k] = p.coeff(k) - q.coeff(k);
  return Poly(std::move(r));
}

Poly operator*(const Poly& p, const Poly& q) {
  if (p.c_.empty() || q.c_.empty()) return Poly();
  std::vector<Rational> r(p.c_.size() + q.c_.size() - 1);
  for (std::size_t i = 0; i < p.c_.size(); ++i)
    for (std::size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  return Poly(std::move(r));
}

Poly operator*(const Rational& s, const Poly& p) {
  std::vector<Rational> r(p.c_);
  for (auto& v : r) v *= s;
  return Poly(std::move(r));
}

namespace {

Rational alpha_of(PolyFamily f) {
  return (f == PolyFamily::P01 || f == PolyFamily::P10) ? Rational(1, 2) : Rational(3, 2);
}

bool starts_01(PolyFamily f) { return f == PolyFamily::P01 || f == PolyFamily::P01HAT; }

void check_n(int N) {
  if (N < 1 || N > 64) throw DomainError("poly_family supports 1 <= N <= 64");
}

}  // namespace

PolySeq poly_family(PolyFamily family, int N) {
  check_n(N);
  const Rational alpha = alpha_of(family);
  PolySeq s;
  s.family = family;
  s.polys.resize(N + 1);
  s.polys[0] = Poly::constant(starts_01(family) ? 0 : 1);
  s.polys[1] = Poly::constant(starts_01(family) ? 1 : 0);
  for (int n = 1; n < N; ++n) {
    Poly t = Rational(2 * n) * (Poly::x() * s.polys[n]) - (Rational(n) - alpha) * s.polys[n - 1];
    s.polys[n + 1] = (1 / (Rational(n) + alpha)) * t;
  }
  return s;
}

PolySeq poly_family_negative(PolyFamily family, int N) {
  check_n(N);
  const Rational alpha = alpha_of(family);
  PolySeq fwd = poly_family(family, 1);
  // w[k] = u_{-k}; u_{n-1} = (2 x n u_n - (n+alpha) u_{n+1}) / (n-alpha)
  std::vector<Poly> w(N + 2);
  w[0] = fwd.polys[0];
  Poly u_np1 = fwd.polys[1];  // u_{n+1} with n = 0
  for (int k = 0; k < N; ++k) {
    int n = -k;
    Poly t = Rational(2 * n) * (Poly::x() * w[k]) - (Rational(n) + alpha) * u_np1;
    u_np1 = w[k];
    w[k + 1] = (1 / (Rational(n) - alpha)) * t;
  }
  w.resize(N + 1);
  return PolySeq{family, std::move(w)};
}

PolyIdentityReport poly_identities(const PolySeq& p01, const PolySeq& p10,
                                   const PolySeq& p01hat, const PolySeq& p10hat) {
  const int N = static_cast<int>(std::min({p01.polys.size(), p10.polys.size(),
                                           p01hat.polys.size(), p10hat.polys.size()})) - 1;
  if (N < 5) throw DomainError("poly_identities needs N >= 5");
  const auto& A = p01.polys;
  const auto& B = p10.polys;
  const auto& Ah = p01hat.polys;
  const auto& Bh = p10hat.polys;
  const Poly x = Poly::x();
  PolyIdentityReport rep;
  rep.N = N;
  auto require = [&](bool ok, const char* name, long n) {
    ++rep.checks;
    if (!ok) throw IdentityViolation(name, n);
  };

  for (int n = 0; n < N; ++n)
    require(B[n] * A[n + 1] - B[n + 1] * A[n] == Poly::constant(Rational(1, 2 * n + 1)),
            "p10(n)p01(n+1) - p10(n+1)p01(n) = 1/(2n+1)", n);
  rep.verified.push_back("wronskian-p");

  for (int n = 0; n < N; ++n)
    require(Bh[n] * Ah[n + 1] - Bh[n + 1] * Ah[n] ==
                Poly::constant(Rational(-3) / ((2 * n - 1) * (2 * n + 1) * (2 * n + 3))),
            "hat wronskian = -3/((2n-1)(2n+1)(2n+3))", n);
  rep.verified.push_back("wronskian-phat");

  {
    Rational lc = 1;  // 2^(2n-2) (n-1)! / (2n-1)!! at n = 1
    for (int n = 1; n <= N; ++n) {
      if (n > 1) lc *= Rational(4 * (n - 1), 2 * n - 1);
      require(A[n].degree() == n - 1 && A[n].leading() == lc, "leading coefficient of p01(n)", n);
    }
  }
  rep.verified.push_back("leading-coefficient");

  for (int n = 1; n < N; ++n) {
    Rational s(3, n);
    require(Rational(-4) * Ah[n] + Rational(12) * (x * Bh[n]) == s * (B[n + 1] - B[n - 1]),
            "-4 p01hat + 12 x p10hat = (3/n)(p10(n+1) - p10(n-1))", n);
    require(Rational(4) * (x * Ah[n]) - Rational(12) * Bh[n] == s * (A[n + 1] - A[n - 1]),
            "4 x p01hat - 12 p10hat = (3/n)(p01(n+1) - p01(n-1))", n);
  }
  rep.verified.push_back("hat-linking");

  const Poly two_x2m1 = Poly({Rational(-2), Rational(0), Rational(2)});
  for (int j = 1; j <= N; ++j) {
    require(two_x2m1 * B[j].derivative() ==
                Rational(2 * j) * (x * B[j]) + A[j] - Rational(2 * j - 1) * B[j - 1],
            "derivative identity for p10", j);
    require(two_x2m1 * A[j].derivative() ==
                Rational(2 * j - 2) * (x * A[j]) - B[j] - Rational(2 * j - 1) * A[j - 1],
            "derivative identity for p01", j);
  }
  rep.verified.push_back("derivative");

  for (int n = 0; n <= N; ++n) {
    Rational f(4 * n * n - 1);
    require(f * Ah[n] == Rational(6) * (x * A[n] + B[n]).derivative() - Rational(3) * A[n],
            "(4n^2-1) p01hat = 6 (x p01 + p10)' - 3 p01", n);
    require(f * Bh[n] == Rational(2) * (x * B[n] + A[n]).derivative() - Rational(3) * B[n],
            "(4n^2-1) p10hat = 2 (x p10 + p01)' - 3 p10", n);
  }
  rep.verified.push_back("hat-from-derivative");

  for (const PolySeq* s : {&p01, &p10, &p01hat, &p10hat}) {
    PolySeq neg = poly_family_negative(s->family, N);
    for (int n = 0; n <= N; ++n) require(neg.polys[n] == s->polys[n], "u(-n) = u(n)", n);
  }
  rep.verified.push_back("reflection");
  return rep;
}

}  // namespace slipflow
