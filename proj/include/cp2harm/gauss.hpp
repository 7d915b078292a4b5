#ifndef CP2HARM_GAUSS_HPP
#define CP2HARM_GAUSS_HPP

#include <string>
#include <vector>

#include "cp2harm/curve.hpp"

namespace cp2harm {

enum class Dir { kDz, kDzbar };

/// A second-fundamental-form value with denominators cleared: the actual
/// section is numerator / denominator, and the denominator is a product of
/// Hermitian norms (real and positive off the degeneracy set).
struct SffNumerator {
  BiVec3 numerator;
  BiPoly denominator;
};

/// Line representative of the d'-Gauss transform of a full curve:
/// Phi = <F,F> F' - <F',F> F. Exactly Hermitian-orthogonal to F.
BiVec3 gauss_prime_rep(const HoloCurve& f);

/// zbar-only representative of g = G'(G'(f)), the antiholomorphic member of
/// the triple: the coefficient-conjugate of the reduced F x F'. Its degree
/// equals k' = 2k - r - 2.
BiVec3 g_curve(const HoloCurve& f);

/// Projection of the d-derivative of `section` onto the line spanned by
/// `target`: numerator <d section, T> T over denominator <T, T>.
SffNumerator sff_into_line(const BiVec3& target, Dir dir, const BiVec3& section);

/// Projection of the d-derivative of `section` onto the orthogonal
/// complement of the line spanned by `line` (the A'_psi / A''_psi case when
/// section spans the line itself).
SffNumerator sff_into_complement(const BiVec3& line, Dir dir, const BiVec3& section);

/// Cleared-denominator numerator of (nabla'' A'_phi)(Phi) for the line
/// spanned by an arbitrary representative Phi; the zero vector iff the line
/// field is harmonic. Scaled by <Phi,Phi>^2 relative to the section value.
BiVec3 harmonicity_numerator_rep(const BiVec3& phi);

/// Same, for phi = G'(f).
BiVec3 harmonicity_numerator(const HoloCurve& f);

/// Cleared numerator of <nabla'^alpha A'_phi(Phi), nabla''^beta A''_phi(Phi)>
/// for alpha, beta in {0,1}.
BiPoly isotropy_numerator_rep(const BiVec3& phi, int alpha, int beta);
BiPoly isotropy_numerator(const HoloCurve& f, int alpha, int beta);

/// Checks <A'_{f,phi} F, Phi> + conj(<A''_{phi,f} Phi, F>) == 0 exactly.
bool adjoint_check_rep(const BiVec3& f_rep, const BiVec3& phi);
bool adjoint_check(const HoloCurve& f);

/// The full Gauss triple (f, phi, g) with cached invariants.
struct HarmonicRep {
  HoloCurve source;
  BiVec3 phi;
  BiVec3 g;      // zbar-only entries
  UniVec3 w;     // reduced F x F' (z-polynomials; g is its coefficient conjugate)
  PluckerInvariants invariants;
};

HarmonicRep make_harmonic_rep(const HoloCurve& f);

struct ExactCheck {
  std::string name;
  bool pass;
};

/// Runs every exact identity for the triple of f: pairwise orthogonality,
/// the vanishing second fundamental forms, harmonicity, isotropy up to
/// first order, the adjoint identity, the inversion Im A''_phi = f, and the
/// degree bookkeeping deg g = k'. All checks are zero-tolerance.
std::vector<ExactCheck> verify_identities(const HoloCurve& f);

}  // namespace cp2harm

#endif
