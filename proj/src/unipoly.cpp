#include "cp2harm/unipoly.hpp"

#include <sstream>

namespace cp2harm {

std::string UniPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << c_[i].str() << ")";
    if (i == 1) os << "*z";
    if (i > 1) os << "*z^" << i;
    first = false;
  }
  return os.str();
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error("gcd undefined");
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x.divmod(y).second;
    x = y;
    y = r;
  }
  return x.monic();
}

ExtendedGcd poly_extended_gcd(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() && b.is_zero()) throw Error("gcd undefined");
  UniPoly r0 = a, r1 = b;
  UniPoly s0 = UniPoly::one(), s1 = UniPoly::zero();
  UniPoly t0 = UniPoly::zero(), t1 = UniPoly::one();
  while (!r1.is_zero()) {
    auto [q, r] = r0.divmod(r1);
    r0 = r1; r1 = r;
    UniPoly s = s0 - q * s1;
    s0 = s1; s1 = s;
    UniPoly t = t0 - q * t1;
    t0 = t1; t1 = t;
  }
  GaussianRational lead = r0.leading();
  GaussianRational inv = GaussianRational(1) / lead;
  return {r0 * inv, s0 * inv, t0 * inv};
}

BezoutSolution bezout_solve(const UniPoly& p, const UniPoly& q, const UniPoly& r) {
  if (p.is_zero()) {
    if (q.degree() != 0) throw Error("no Bezout solution guaranteed");
    // A*Q = R with Q a nonzero constant.
    return {r * (GaussianRational(1) / q.coeff(0)), UniPoly::zero()};
  }
  ExtendedGcd e = poly_extended_gcd(p, q);
  if (e.g.degree() != 0) throw Error("no Bezout solution guaranteed");
  // s*P + t*Q = 1, so (R t) Q - (-R s) P = R.
  UniPoly a0 = r * e.t;
  UniPoly b0 = -(r * e.s);
  // Normalize within the solution family (A - uP, B - uQ).
  auto [u, a] = a0.divmod(p);
  UniPoly b = b0 - u * q;
  return {a, b};
}

}  // namespace cp2harm
