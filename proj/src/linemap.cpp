#include "cp2harm/linemap.hpp"

namespace cp2harm {

PolyTripleD PolyTripleD::from_exact(const UniVec3& v, int pad_degree) {
  PolyTripleD r;
  int deg = pad_degree;
  for (int i = 0; i < 3; ++i) deg = std::max(deg, v[i].degree());
  for (int i = 0; i < 3; ++i) {
    r.c[i].assign(deg + 1, 0.0);
    for (int n = 0; n <= v[i].degree(); ++n) r.c[i][n] = v[i].coeff(n).to_complex();
  }
  return r;
}

int PolyTripleD::max_degree() const {
  int d = -1;
  for (int i = 0; i < 3; ++i) d = std::max(d, static_cast<int>(c[i].size()) - 1);
  return d;
}

Vec3c PolyTripleD::eval(complexd z) const {
  Vec3c r;
  for (int i = 0; i < 3; ++i) {
    complexd acc = 0.0;
    for (auto it = c[i].rbegin(); it != c[i].rend(); ++it) acc = acc * z + *it;
    r[i] = acc;
  }
  return r;
}

PolyTripleD PolyTripleD::derivative() const {
  PolyTripleD r;
  for (int i = 0; i < 3; ++i) {
    if (c[i].size() <= 1) continue;
    r.c[i].resize(c[i].size() - 1);
    for (size_t n = 1; n < c[i].size(); ++n)
      r.c[i][n - 1] = static_cast<double>(n) * c[i][n];
  }
  return r;
}

PolyTripleD PolyTripleD::reversed(int degree) const {
  PolyTripleD r;
  for (int i = 0; i < 3; ++i) {
    r.c[i].assign(degree + 1, 0.0);
    for (size_t n = 0; n < c[i].size(); ++n) r.c[i][degree - n] = c[i][n];
  }
  return r;
}

PolyTripleD PolyTripleD::operator+(const PolyTripleD& o) const {
  PolyTripleD r;
  for (int i = 0; i < 3; ++i) {
    r.c[i].resize(std::max(c[i].size(), o.c[i].size()), 0.0);
    for (size_t n = 0; n < c[i].size(); ++n) r.c[i][n] += c[i][n];
    for (size_t n = 0; n < o.c[i].size(); ++n) r.c[i][n] += o.c[i][n];
  }
  return r;
}

PolyTripleD PolyTripleD::scaled(complexd a) const {
  PolyTripleD r = *this;
  for (int i = 0; i < 3; ++i)
    for (auto& x : r.c[i]) x *= a;
  return r;
}

PolyTripleD TripleFamily::at(double t) const {
  if (powers.empty()) throw Error("empty family");
  PolyTripleD r = powers[0];
  double tm = 1.0;
  for (size_t m = 1; m < powers.size(); ++m) {
    tm *= t;
    r = r + powers[m].scaled(tm);
  }
  return r;
}

int TripleFamily::generic_degree() const {
  int d = -1;
  for (const auto& p : powers) d = std::max(d, p.max_degree());
  return d;
}

Vec3c gauss_point_rep(const Vec3c& f, const Vec3c& fp) {
  // <a,b> below is b^dagger a: Hermitian, antilinear in b.
  complexd n = f.squaredNorm();
  complexd a = f.dot(fp);  // <fp, f>
  return n * fp - a * f;
}

LineMap LineMap::from_curve(const HoloCurve& f) {
  PolyTripleD z_form = PolyTripleD::from_exact(f.f());
  PolyTripleD w_form = z_form.reversed(f.degree_k());
  return LineMap([z_form, w_form](Chart chart, complexd zeta) {
    return chart == Chart::kZ ? z_form.eval(zeta) : w_form.eval(zeta);
  });
}

LineMap LineMap::from_antiholo_triple(const UniVec3& w) {
  PolyTripleD z_form = PolyTripleD::from_exact(w);
  PolyTripleD w_form = z_form.reversed(z_form.max_degree());
  return LineMap([z_form, w_form](Chart chart, complexd zeta) {
    Vec3c v = chart == Chart::kZ ? z_form.eval(zeta) : w_form.eval(zeta);
    return Vec3c(v.conjugate());
  });
}

LineMap LineMap::gauss_of_triple(const PolyTripleD& f) {
  PolyTripleD zf = f, zfp = f.derivative();
  PolyTripleD wf = f.reversed(f.max_degree());
  PolyTripleD wfp = wf.derivative();
  return LineMap([zf, zfp, wf, wfp](Chart chart, complexd zeta) {
    return chart == Chart::kZ ? gauss_point_rep(zf.eval(zeta), zfp.eval(zeta))
                              : gauss_point_rep(wf.eval(zeta), wfp.eval(zeta));
  });
}

LineMap LineMap::gauss_of_curve(const HoloCurve& f) {
  if (!f.full()) throw Error("Gauss transform requires a full curve");
  return gauss_of_triple(PolyTripleD::from_exact(f.f()));
}

LineMap LineMap::gauss_of_family(const TripleFamily& fam, double t) {
  PolyTripleD member = fam.at(t);
  PolyTripleD zf = member, zfp = member.derivative();
  PolyTripleD wf = member.reversed(fam.generic_degree());
  PolyTripleD wfp = wf.derivative();
  return LineMap([zf, zfp, wf, wfp](Chart chart, complexd zeta) {
    return chart == Chart::kZ ? gauss_point_rep(zf.eval(zeta), zfp.eval(zeta))
                              : gauss_point_rep(wf.eval(zeta), wfp.eval(zeta));
  });
}

LineMap LineMap::curve_of_family(const TripleFamily& fam, double t) {
  PolyTripleD member = fam.at(t);
  PolyTripleD wf = member.reversed(fam.generic_degree());
  return LineMap([member, wf](Chart chart, complexd zeta) {
    return chart == Chart::kZ ? member.eval(zeta) : wf.eval(zeta);
  });
}

}  // namespace cp2harm
