#ifndef CP2HARM_PIPELINE_HPP
#define CP2HARM_PIPELINE_HPP

#include <functional>
#include <vector>

#include "cp2harm/family.hpp"
#include "cp2harm/jacobi.hpp"

namespace cp2harm {

enum class Transform { kNone, kGaussPrime };

/// Default Richardson base step for t-derivatives of families (balances
/// rounding against truncation of the extrapolated central differences).
inline double default_push_step() { return 2e-3; }

LineMap transformed_map(const HoloCurve& f, Transform tr);

/// Real-linearly independent coefficient directions of degree <= k triples,
/// with the two directions along complex scaling of F projected out and the
/// rest orthonormalized: 6(k+1) - 2 directions in a deterministic order.
std::vector<PolyTripleD> coefficient_directions(const HoloCurve& f);

/// The family F + t * dF.
TripleFamily coefficient_family(const HoloCurve& f, const PolyTripleD& df);

/// Exact tangent field of the family [F + s dF] along the curve itself
/// (no finite differences).
TangentField curve_coeff_field(const HoloCurve& f, const PolyTripleD& df);

/// d/dt at t = 0 of the (optionally Gauss-transformed) family, by
/// Richardson-extrapolated central differences of the line projectors with
/// steps t_step and t_step/2.
TangentField push_field(const TripleFamily& fam, Transform tr, double t_step);

/// Materialized push with per-node validity flags: a node is invalid when
/// the two finite-difference slopes disagree beyond tolerance (the family
/// degenerates at that point within the step) or the representative
/// collapses.
SampledField push_field_sampled(const TripleFamily& fam, Transform tr,
                                const SampledMap& base, double t_step);

/// sup of the invariant norm of nabla'' v' over the grid; near zero iff the
/// field is holomorphic.
double prop41_residual(const LineMap& map, const TangentField& v,
                       const SampledMap& sampled);

/// Step-1 pull: the (1,0)-variation u' along f = G''(phi) computed from
/// (phi, d''phi, v, d''v) only; no t-family involved. The returned field
/// lives along the d''-Gauss transform of phi.
TangentField pull_step1(const LineMap& phi_map, const TangentField& v, double h);

/// Affine chart components (v^1, v^2) of the pulled field at one point.
std::array<complexd, 2> pull_affine_components(const LineMap& phi_map,
                                               const TangentField& v, Chart chart,
                                               complexd zeta, double h);

/// Least-squares fit of the pulled field's rational form R^j / (Q^j)^2 over
/// the z-chart nodes, snapped to exact Gaussian-rational coefficients.
struct RationalFit {
  RationalField field;
  double fit_residual;
  double snap_distance;
};
RationalFit fit_rational_field(const LineMap& phi_map, const TangentField& v,
                               const AffineForm& affine, const ChartGrid& grid,
                               int deg_bound, double h);

/// One-parameter family of line maps (not necessarily harmonic off t = 0).
using MapFamily = std::function<LineMap(double)>;

/// Finite-difference t-derivatives at 0 of the first-order pairings: the
/// conformality pairing, its d''-derivative, and the two cubic-differential
/// pairings. All four vanish for a Jacobi variation of a harmonic map.
struct Lemma51Report {
  double d_pairing;
  double d_dzbar_pairing;
  double d_cubic_a;
  double d_cubic_b;
  double t0_pairing;  // isotropy of the t = 0 member itself
};
Lemma51Report lemma51_checks(const MapFamily& fam, const ChartGrid& grid,
                             double t_step);

/// Numerical rank of the span of the fields under the L^2 quadrature
/// pairing. Every field must pass the Jacobi residual bound first; a
/// failing field is reported by index.
struct NullityReport {
  int rank = 0;
  std::vector<double> residuals;
  std::vector<double> eigenvalues;  // Gram spectrum, descending
  double jacobi_tol = 0.0, rank_tol = 0.0;
};
NullityReport nullity_rank(const LineMap& map, const std::vector<TangentField>& fields,
                           const ChartGrid& grid, double jacobi_tol, double rank_tol);

/// Relative eigenvalue cutoff for the Gram rank.
inline double default_rank_tolerance() { return 1e-7; }

/// Steps 1-6 at desk scale for an r = 0 curve: push a coefficient
/// direction, pull it back, recover and integrate its rational form, push
/// the regenerated family, and compare. Also runs the independence check
/// (two families with the same first-order term).
struct RoundtripReport {
  double fit_residual;
  double snap_distance;
  double discrepancy;    // sup FS distance between the two pushed fields
  double independence;   // sup FS distance for the O(t^2)-modified family
  std::size_t valid_nodes, total_nodes;
};
RoundtripReport pipeline_roundtrip(const HoloCurve& f, const UniVec3& direction,
                                   const ChartGrid& grid, double t_step);

}  // namespace cp2harm

#endif
