#ifndef CP2HARM_JACOBI_HPP
#define CP2HARM_JACOBI_HPP

#include <cstdint>
#include <vector>

#include "cp2harm/energy.hpp"

namespace cp2harm {

/// Grid sampling of a tangent field: per-node representative in the gauge
/// of the map's sampled jet, plus a validity flag (nodes where a finite-
/// difference family degenerated are excluded from sup norms).
struct SampledField {
  std::vector<Vec3c> values;
  std::vector<std::uint8_t> valid;

  std::size_t valid_count() const;
};

SampledField sample_field(const TangentField& field, const SampledMap& sampled);

/// J_phi(v) = Delta v - trace R(dphi, v) dphi at one frame, as a tangent
/// representative. The map must be harmonic to scheme tolerance for the
/// result to be meaningful.
Vec3c jacobi_apply_point(const MapJet& mj, const FieldJet& fj, double conformal2);

/// Applies the Jacobi operator over the whole grid; result values sit in
/// the gauge of map.jets.
SampledField jacobi_apply(const LineMap& map, const TangentField& field,
                          const SampledMap& sampled);

/// sup Fubini-Study norm of J_phi(v) over the grid.
double jacobi_residual(const LineMap& map, const TangentField& field,
                       const SampledMap& sampled);

/// Jacobi residual threshold at resolution n, calibrated from the
/// convergence study of fields pushed from holomorphic families (criterion
/// anchored at n = 64, fourth-order decay).
inline double jacobi_tolerance(int n) {
  double s = 64.0 / n;
  return 1e-5 * s * s * s * s;
}

}  // namespace cp2harm

#endif
