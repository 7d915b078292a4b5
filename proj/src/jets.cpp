#include "cp2harm/jets.hpp"

namespace cp2harm {

namespace {

constexpr complexd kI{0.0, 1.0};

struct Derivs {
  Vec3c dx, dy, dxx, dyy, dxy;
};

Derivs stencil_derivs(const std::array<Vec3c, 13>& f, double h) {
  Derivs d;
  d.dx = (-f[3] + 8.0 * f[1] - 8.0 * f[2] + f[4]) / (12.0 * h);
  d.dy = (-f[7] + 8.0 * f[5] - 8.0 * f[6] + f[8]) / (12.0 * h);
  d.dxx = (-f[3] + 16.0 * f[1] - 30.0 * f[0] + 16.0 * f[2] - f[4]) / (12.0 * h * h);
  d.dyy = (-f[7] + 16.0 * f[5] - 30.0 * f[0] + 16.0 * f[6] - f[8]) / (12.0 * h * h);
  d.dxy = (f[9] - f[10] - f[11] + f[12]) / (4.0 * h * h);
  return d;
}

}  // namespace

JetFrame make_frame(const LineMap& map, Chart chart, complexd zeta, double h) {
  JetFrame fr;
  fr.chart = chart;
  fr.zeta = zeta;
  fr.h = h;
  const std::array<complexd, 13> offsets = {
      complexd(0, 0),
      complexd(h, 0),       complexd(-h, 0),     complexd(2 * h, 0),  complexd(-2 * h, 0),
      complexd(0, h),       complexd(0, -h),     complexd(0, 2 * h),  complexd(0, -2 * h),
      complexd(h, h),       complexd(h, -h),     complexd(-h, h),     complexd(-h, -h)};

  Vec3c anchor = map.unit_rep(chart, zeta);
  for (int i = 0; i < 13; ++i) {
    fr.points[i] = zeta + offsets[i];
    Vec3c r = map.rep(chart, fr.points[i]);
    Vec3c aligned = r * r.dot(anchor);  // proportional to P(zeta_i) anchor
    double n = aligned.norm();
    if (n < 1e-14)
      throw Error("line field degenerates within a stencil (point too close to the singular set)");
    fr.gauge[i] = aligned / n;
  }
  return fr;
}

MapJet map_jet(const JetFrame& fr) {
  Derivs d = stencil_derivs(fr.gauge, fr.h);
  MapJet j;
  j.psi = fr.gauge[0];
  j.raw_dp = 0.5 * (d.dx - kI * d.dy);
  j.raw_dpp = 0.5 * (d.dx + kI * d.dy);
  j.raw_mixed = 0.25 * (d.dxx + d.dyy);
  Vec3c ddp = 0.25 * (d.dxx - d.dyy) - 0.5 * kI * d.dxy;
  Vec3c ddpp = 0.25 * (d.dxx - d.dyy) + 0.5 * kI * d.dxy;

  j.a_p = j.psi.dot(j.raw_dp);
  j.a_pp = j.psi.dot(j.raw_dpp);
  j.mixed_psi = j.psi.dot(j.raw_mixed);
  j.dp = j.raw_dp - j.a_p * j.psi;
  j.dpp = j.raw_dpp - j.a_pp * j.psi;
  j.mixed_perp = j.raw_mixed - j.mixed_psi * j.psi;
  j.ddp_perp = ddp - j.psi.dot(ddp) * j.psi;
  j.ddpp_perp = ddpp - j.psi.dot(ddpp) * j.psi;
  j.dp_norm2 = j.raw_dp.squaredNorm();
  j.dpp_norm2 = j.raw_dpp.squaredNorm();
  return j;
}

TangentField TangentField::projected_constant(const Vec3c& c) {
  Vec3c cc = c;
  return TangentField([cc](Chart, complexd, const Vec3c& psi) {
    return Vec3c(cc - psi.dot(cc) * psi);
  });
}

FieldJet field_jet(const JetFrame& fr, const MapJet&, const TangentField& field) {
  std::array<Vec3c, 13> vals;
  for (int i = 0; i < 13; ++i)
    vals[i] = field.value(fr.chart, fr.points[i], fr.gauge[i]);
  Derivs d = stencil_derivs(vals, fr.h);
  FieldJet j;
  j.v = vals[0];
  j.raw_dp = 0.5 * (d.dx - kI * d.dy);
  j.raw_dpp = 0.5 * (d.dx + kI * d.dy);
  j.raw_mixed = 0.25 * (d.dxx + d.dyy);
  return j;
}

Vec3c covariant_dp(const MapJet& mj, const FieldJet& fj) {
  Vec3c p = fj.raw_dp - mj.psi.dot(fj.raw_dp) * mj.psi;
  return p - mj.a_p * fj.v;
}

Vec3c covariant_dpp(const MapJet& mj, const FieldJet& fj) {
  Vec3c p = fj.raw_dpp - mj.psi.dot(fj.raw_dpp) * mj.psi;
  return p - mj.a_pp * fj.v;
}

Vec3c second_sym(const MapJet& mj, const FieldJet& fj) {
  Vec3c mixed_perp = fj.raw_mixed - mj.psi.dot(fj.raw_mixed) * mj.psi;
  complexd bp = mj.psi.dot(fj.raw_dp);
  complexd bpp = mj.psi.dot(fj.raw_dpp);
  complexd c = 2.0 * mj.mixed_psi + complexd(mj.dp_norm2 + mj.dpp_norm2, 0.0);
  return 2.0 * mixed_perp - bp * mj.dpp - bpp * mj.dp - c * fj.v;
}

}  // namespace cp2harm
