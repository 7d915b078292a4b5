#ifndef CP2HARM_LINEMAP_HPP
#define CP2HARM_LINEMAP_HPP

#include <array>
#include <complex>
#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "cp2harm/curve.hpp"

namespace cp2harm {

using complexd = std::complex<double>;
using Vec3c = Eigen::Vector3cd;
using Mat3c = Eigen::Matrix3cd;

/// Numeric polynomial triple (ascending complex coefficients per component).
struct PolyTripleD {
  std::array<std::vector<complexd>, 3> c;

  static PolyTripleD from_exact(const UniVec3& v, int pad_degree = -1);

  int max_degree() const;
  Vec3c eval(complexd z) const;
  PolyTripleD derivative() const;
  /// Coefficient reversal at a fixed degree (valid for z -> 1/z).
  PolyTripleD reversed(int degree) const;

  PolyTripleD operator+(const PolyTripleD& o) const;
  PolyTripleD scaled(complexd a) const;
};

/// Polynomial triple depending polynomially on a real parameter t:
/// F(z, t) = sum_m t^m powers[m](z).
struct TripleFamily {
  std::vector<PolyTripleD> powers;

  PolyTripleD at(double t) const;
  int generic_degree() const;
};

/// A smooth field of lines in CP^2 over the sphere, evaluated per chart as
/// an unnormalized representative (nonvanishing off a finite set).
class LineMap {
public:
  using RepFn = std::function<Vec3c(Chart, complexd)>;

  explicit LineMap(RepFn fn) : fn_(std::move(fn)) {}

  Vec3c rep(Chart chart, complexd zeta) const { return fn_(chart, zeta); }

  Vec3c unit_rep(Chart chart, complexd zeta) const {
    Vec3c r = fn_(chart, zeta);
    double n = r.norm();
    if (n == 0.0) throw Error("line representative vanished at a grid point");
    return r / n;
  }

  Mat3c projector(Chart chart, complexd zeta) const {
    Vec3c u = unit_rep(chart, zeta);
    return u * u.adjoint();
  }

  /// The holomorphic curve itself.
  static LineMap from_curve(const HoloCurve& f);
  /// Antiholomorphic curve with z-polynomial data w: the map z -> conj(w(z)).
  static LineMap from_antiholo_triple(const UniVec3& w);
  /// Pointwise d'-Gauss transform of a numeric triple (z-chart data).
  static LineMap gauss_of_triple(const PolyTripleD& f);
  static LineMap gauss_of_curve(const HoloCurve& f);
  /// Gauss transform of a family member; the triple family is in z-chart
  /// coordinates and is reversed at its generic degree for the w-chart.
  static LineMap gauss_of_family(const TripleFamily& fam, double t);
  static LineMap curve_of_family(const TripleFamily& fam, double t);

private:
  RepFn fn_;
};

/// Representative of the Gauss line of a triple at one point, from samples
/// of the triple and its derivative: |F|^2 F' - <F',F> F.
Vec3c gauss_point_rep(const Vec3c& f, const Vec3c& fp);

}  // namespace cp2harm

#endif
