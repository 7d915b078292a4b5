#ifndef CP2HARM_CURVE_HPP
#define CP2HARM_CURVE_HPP

#include <complex>
#include <optional>

#include <Eigen/Dense>

#include "cp2harm/vec3.hpp"

namespace cp2harm {

enum class Chart { kZ, kW };  // w = 1/z; the w-chart is regular at infinity

/// The four invariants derived from degree k and total ramification r:
/// d = k - r - 2, E = 3k - r - 2, k' = 2k - r - 2, r' = 3k - 2r - 6.
struct PluckerInvariants {
  int d, energy_e, k_prime, r_prime;
};

/// A holomorphic map S^2 -> CP^2 held as a coprime polynomial triple.
///
/// Construction removes the content of the raw triple and caches degree,
/// fullness, and (for full curves) the total ramification index. Values are
/// immutable after construction.
class HoloCurve {
public:
  /// Normalizes a nonzero triple; errors on the zero vector.
  static HoloCurve make(const UniVec3& raw);

  const UniVec3& f() const { return f_; }
  int degree_k() const { return k_; }
  bool full() const { return full_; }

  /// Total ramification index r, counting the point at infinity through the
  /// degree deficiency of the reduced W = F x F'. Errors on non-full curves.
  int ramification_r() const;

  PluckerInvariants plucker() const;

  /// W = F x F' with content removed, the antiholomorphic-side raw data.
  const UniVec3& reduced_w() const { return w_reduced_; }
  const UniPoly& w_content() const { return w_content_; }

  /// Unit representative of the curve's line at a chart point. The w-chart
  /// evaluates the degree-reversed triple, so z = infinity is regular.
  Eigen::Vector3cd eval_chart(std::complex<double> zeta, Chart chart) const;

private:
  HoloCurve() = default;

  UniVec3 f_;
  int k_ = 0;
  bool full_ = false;
  std::optional<int> r_;
  UniVec3 w_reduced_;
  UniPoly w_content_;
};

}  // namespace cp2harm

#endif
