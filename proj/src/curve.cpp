#include "cp2harm/curve.hpp"

namespace cp2harm {

namespace {

int max_degree(const UniVec3& v) {
  int d = -1;
  for (int i = 0; i < 3; ++i) d = std::max(d, v[i].degree());
  return d;
}

// det [F, F', F''], the fullness criterion.
UniPoly wronskian(const UniVec3& f) {
  UniVec3 f1 = derivative(f);
  UniVec3 f2 = derivative(f1);
  return dot(cross(f, f1), f2);
}

}  // namespace

HoloCurve HoloCurve::make(const UniVec3& raw) {
  if (raw.is_zero()) throw Error("curve from zero vector");
  HoloCurve c;
  c.f_ = remove_content(raw).reduced;
  c.k_ = max_degree(c.f_);
  c.full_ = !wronskian(c.f_).is_zero();
  if (c.full_) {
    UniVec3 w = cross(c.f_, derivative(c.f_));
    ContentSplit split = remove_content(w);
    c.w_reduced_ = split.reduced;
    c.w_content_ = split.content;
    c.r_ = (2 * c.k_ - 2) - max_degree(c.w_reduced_);
  }
  return c;
}

int HoloCurve::ramification_r() const {
  if (!r_) throw Error("ramification undefined (W identically degenerate)");
  return *r_;
}

PluckerInvariants HoloCurve::plucker() const {
  int r = ramification_r();
  return {k_ - r - 2, 3 * k_ - r - 2, 2 * k_ - r - 2, 3 * k_ - 2 * r - 6};
}

Eigen::Vector3cd HoloCurve::eval_chart(std::complex<double> zeta, Chart chart) const {
  Eigen::Vector3cd v;
  if (chart == Chart::kZ) {
    for (int i = 0; i < 3; ++i) v[i] = f_[i].eval(zeta);
  } else {
    for (int i = 0; i < 3; ++i) v[i] = f_[i].reverse(k_).eval(zeta);
  }
  double n = v.norm();
  if (n == 0.0) throw Error("curve representative vanished at a chart point");
  return v / n;
}

}  // namespace cp2harm
