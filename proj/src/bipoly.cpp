#include "cp2harm/bipoly.hpp"

#include <sstream>
#include <vector>

namespace cp2harm {

std::complex<double> BiPoly::eval(std::complex<double> z, std::complex<double> zb) const {
  // Powers are cached up to the bidegree; term count stays small in practice.
  int dz = deg_z(), db = deg_zbar();
  std::vector<std::complex<double>> pz(std::max(dz, 0) + 1), pb(std::max(db, 0) + 1);
  pz[0] = 1.0;
  for (int i = 1; i <= dz; ++i) pz[i] = pz[i - 1] * z;
  pb[0] = 1.0;
  for (int i = 1; i <= db; ++i) pb[i] = pb[i - 1] * zb;
  std::complex<double> acc = 0;
  for (const auto& [k, v] : t_) acc += v.to_complex() * pz[k.first] * pb[k.second];
  return acc;
}

std::string BiPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : t_) {
    if (!first) os << " + ";
    os << "(" << v.str() << ")";
    if (k.first == 1) os << "*z";
    if (k.first > 1) os << "*z^" << k.first;
    if (k.second == 1) os << "*zb";
    if (k.second > 1) os << "*zb^" << k.second;
    first = false;
  }
  return os.str();
}

}  // namespace cp2harm
