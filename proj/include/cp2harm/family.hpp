#ifndef CP2HARM_FAMILY_HPP
#define CP2HARM_FAMILY_HPP

#include <array>

#include "cp2harm/curve.hpp"
#include "cp2harm/linemap.hpp"

namespace cp2harm {

/// Affine form of a curve in the chart [1, z^1, z^2]: f^j = P^j / Q^j with
/// coprime (P^j, Q^j), reduced from the homogeneous triple.
struct AffineForm {
  std::array<UniPoly, 2> p, q;
};

AffineForm affine_form(const HoloCurve& f);

/// Holomorphic vector field along an affine curve: component j is
/// R^j / (Q^j)^2 with the curve's own denominator Q^j.
struct RationalField {
  std::array<UniPoly, 2> numerator;
};

/// One-parameter family f_t^j = (P^j + t A^j) / (Q^j + t B^j); the exact
/// t-derivative at 0 is (A^j Q^j - B^j P^j) / (Q^j)^2.
struct DeformationFamily {
  std::array<UniPoly, 2> p, a, q, b;

  /// The cross-multiplied derivative identity A Q - B P - R = 0, exactly.
  bool derivative_matches(const RationalField& v) const;

  /// Homogeneous triple family for numerical evaluation: components
  /// [(Q1+tB1)(Q2+tB2), (P1+tA1)(Q2+tB2), (Q1+tB1)(P2+tA2)] expanded
  /// in powers of t.
  TripleFamily triple_family() const;
};

/// Integrates a holomorphic vector field along a holomorphic curve into an
/// exact one-parameter family of holomorphic maps by solving the Bezout
/// equations A^j Q^j - B^j P^j = R^j. Errors if some (P^j, Q^j) is not
/// coprime.
DeformationFamily integrate_holo_field(const AffineForm& f, const RationalField& v);
DeformationFamily integrate_holo_field(const HoloCurve& f, const RationalField& v);

}  // namespace cp2harm

#endif
