#include "cp2harm/family.hpp"

namespace cp2harm {

AffineForm affine_form(const HoloCurve& f) {
  const UniVec3& fv = f.f();
  if (fv[0].is_zero()) throw Error("curve not in the affine chart (first component zero)");
  AffineForm a;
  for (int j = 0; j < 2; ++j) {
    const UniPoly& num = fv[j + 1];
    if (num.is_zero()) {
      a.p[j] = UniPoly::zero();
      a.q[j] = UniPoly::one();
      continue;
    }
    UniPoly g = poly_gcd(num, fv[0]);
    a.p[j] = num.divmod(g).first;
    a.q[j] = fv[0].divmod(g).first;
  }
  return a;
}

bool DeformationFamily::derivative_matches(const RationalField& v) const {
  for (int j = 0; j < 2; ++j)
    if (!(a[j] * q[j] - b[j] * p[j] - v.numerator[j]).is_zero()) return false;
  return true;
}

TripleFamily DeformationFamily::triple_family() const {
  // Coefficients of t^0, t^1, t^2 of each homogeneous component.
  UniVec3 c0{q[0] * q[1], p[0] * q[1], q[0] * p[1]};
  UniVec3 c1{q[0] * b[1] + b[0] * q[1], p[0] * b[1] + a[0] * q[1],
             q[0] * a[1] + b[0] * p[1]};
  UniVec3 c2{b[0] * b[1], a[0] * b[1], b[0] * a[1]};
  int deg = -1;
  for (const UniVec3* v : {&c0, &c1, &c2})
    for (int i = 0; i < 3; ++i) deg = std::max(deg, (*v)[i].degree());
  TripleFamily fam;
  fam.powers = {PolyTripleD::from_exact(c0, deg), PolyTripleD::from_exact(c1, deg),
                PolyTripleD::from_exact(c2, deg)};
  return fam;
}

DeformationFamily integrate_holo_field(const AffineForm& f, const RationalField& v) {
  DeformationFamily fam;
  fam.p = f.p;
  fam.q = f.q;
  for (int j = 0; j < 2; ++j) {
    BezoutSolution s = bezout_solve(f.p[j], f.q[j], v.numerator[j]);
    fam.a[j] = s.a;
    fam.b[j] = s.b;
  }
  return fam;
}

DeformationFamily integrate_holo_field(const HoloCurve& f, const RationalField& v) {
  return integrate_holo_field(affine_form(f), v);
}

}  // namespace cp2harm
