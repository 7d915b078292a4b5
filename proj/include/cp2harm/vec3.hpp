#ifndef CP2HARM_VEC3_HPP
#define CP2HARM_VEC3_HPP

#include <array>
#include <utility>

#include "cp2harm/bipoly.hpp"

namespace cp2harm {

/// Triple of polynomials of one kind, a section of the trivial C^3 bundle.
template <class P>
struct Vec3 {
  std::array<P, 3> c{};

  P& operator[](int i) { return c[i]; }
  const P& operator[](int i) const { return c[i]; }

  bool is_zero() const { return c[0].is_zero() && c[1].is_zero() && c[2].is_zero(); }

  Vec3 operator-() const { return {-c[0], -c[1], -c[2]}; }
  Vec3 operator+(const Vec3& o) const {
    return {c[0] + o.c[0], c[1] + o.c[1], c[2] + o.c[2]};
  }
  Vec3 operator-(const Vec3& o) const { return *this + (-o); }
  bool operator==(const Vec3& o) const { return c == o.c; }

  template <class S>
  Vec3 scaled(const S& a) const {
    return {c[0] * a, c[1] * a, c[2] * a};
  }
};

using UniVec3 = Vec3<UniPoly>;
using BiVec3 = Vec3<BiPoly>;

inline BiVec3 promote_z(const UniVec3& v) {
  return {BiPoly::from_z(v[0]), BiPoly::from_z(v[1]), BiPoly::from_z(v[2])};
}
inline BiVec3 promote_zbar(const UniVec3& v) {
  return {BiPoly::from_zbar(v[0]), BiPoly::from_zbar(v[1]), BiPoly::from_zbar(v[2])};
}

inline UniVec3 derivative(const UniVec3& v) {
  return {v[0].derivative(), v[1].derivative(), v[2].derivative()};
}
inline BiVec3 dz(const BiVec3& v) { return {v[0].dz(), v[1].dz(), v[2].dz()}; }
inline BiVec3 dzbar(const BiVec3& v) {
  return {v[0].dzbar(), v[1].dzbar(), v[2].dzbar()};
}
inline BiVec3 conj_swap(const BiVec3& v) {
  return {v[0].conj_swap(), v[1].conj_swap(), v[2].conj_swap()};
}

/// Standard Hermitian pairing <u, v> = sum_i u_i * conj_swap(v_i),
/// antilinear in the second slot.
inline BiPoly herm_pair(const BiVec3& u, const BiVec3& v) {
  BiPoly acc;
  for (int i = 0; i < 3; ++i) acc = acc + u[i] * v[i].conj_swap();
  return acc;
}
inline BiPoly herm_pair(const UniVec3& u, const UniVec3& v) {
  return herm_pair(promote_z(u), promote_z(v));
}

/// Bilinear dot product (no conjugation).
inline BiPoly dot(const BiVec3& u, const BiVec3& v) {
  BiPoly acc;
  for (int i = 0; i < 3; ++i) acc = acc + u[i] * v[i];
  return acc;
}
inline UniPoly dot(const UniVec3& u, const UniVec3& v) {
  UniPoly acc;
  for (int i = 0; i < 3; ++i) acc = acc + u[i] * v[i];
  return acc;
}

template <class P>
inline Vec3<P> cross(const Vec3<P>& u, const Vec3<P>& v) {
  return {u[1] * v[2] - u[2] * v[1],
          u[2] * v[0] - u[0] * v[2],
          u[0] * v[1] - u[1] * v[0]};
}

struct ContentSplit {
  UniVec3 reduced;   // coprime components, first nonzero component monic-led
  UniPoly content;   // monic gcd of the three components
};

/// Factors out the monic gcd of the components and scales the quotient so
/// that the leading coefficient of its first nonzero component is 1.
/// Errors on the zero vector.
ContentSplit remove_content(const UniVec3& v);

/// True iff the two vectors are proportional as polynomial vectors, i.e.
/// all 2x2 minors vanish identically.
bool proportional(const BiVec3& a, const BiVec3& b);

}  // namespace cp2harm

#endif
