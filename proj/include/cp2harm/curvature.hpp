#ifndef CP2HARM_CURVATURE_HPP
#define CP2HARM_CURVATURE_HPP

#include "cp2harm/linemap.hpp"

namespace cp2harm {

/// Real Fubini-Study inner product of tangent representatives at a common
/// point (metric normalized to holomorphic sectional curvature 1).
inline double fs_inner(const Vec3c& u, const Vec3c& v) {
  return 4.0 * std::real(v.dot(u));
}

inline double fs_norm(const Vec3c& u) { return 2.0 * u.norm(); }

/// Curvature tensor of CP^2 as a complex space form with c = 1:
///   R(X,Y)Z = (c/4) [ <Y,Z>X - <X,Z>Y + <JY,Z>JX - <JX,Z>JY + 2<JY,X>JZ ]
/// acting on tangent representatives (J is multiplication by i).
inline Vec3c curvature_apply(const Vec3c& x, const Vec3c& y, const Vec3c& z) {
  const complexd i{0.0, 1.0};
  Vec3c jx = i * x, jy = i * y, jz = i * z;
  Vec3c r = fs_inner(y, z) * x - fs_inner(x, z) * y + fs_inner(jy, z) * jx -
            fs_inner(jx, z) * jy + 2.0 * fs_inner(jy, x) * jz;
  return 0.25 * r;
}

}  // namespace cp2harm

#endif
