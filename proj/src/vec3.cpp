#include "cp2harm/vec3.hpp"

namespace cp2harm {

ContentSplit remove_content(const UniVec3& v) {
  if (v.is_zero()) throw Error("content of zero vector");
  UniPoly g;
  bool have = false;
  for (int i = 0; i < 3; ++i) {
    if (v[i].is_zero()) continue;
    g = have ? poly_gcd(g, v[i]) : v[i].monic();
    have = true;
  }
  UniVec3 w;
  for (int i = 0; i < 3; ++i)
    w[i] = v[i].is_zero() ? UniPoly::zero() : v[i].divmod(g).first;
  GaussianRational lead;
  for (int i = 0; i < 3; ++i) {
    if (!w[i].is_zero()) {
      lead = w[i].leading();
      break;
    }
  }
  return {w.scaled(GaussianRational(1) / lead), g};
}

bool proportional(const BiVec3& a, const BiVec3& b) {
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

}  // namespace cp2harm
