#ifndef CP2HARM_ENERGY_HPP
#define CP2HARM_ENERGY_HPP

#include <vector>

#include "cp2harm/grid.hpp"
#include "cp2harm/jets.hpp"

namespace cp2harm {

/// Chart-grid sampling of a line map: one jet per node.
struct SampledMap {
  const ChartGrid* grid = nullptr;
  std::vector<MapJet> jets;
};

SampledMap sample_map(const LineMap& map, const ChartGrid& grid);

/// Energy with the Fubini-Study metric normalized to holomorphic sectional
/// curvature 1 (projective lines have area 4 pi, so holomorphic maps of
/// degree d have energy 4 pi d).
double fs_energy(const SampledMap& map);

/// (E' - E'') / 4 pi; integer-close for genuine maps.
double fs_degree(const SampledMap& map);

/// sup over nodes of |tau(phi)| = |trace nabla d phi| in Fubini-Study units.
double tension_residual(const SampledMap& map);

/// Threshold for tension_residual at resolution n, pinned from the scheme's
/// fourth-order convergence anchored at n = 64.
inline double tension_tolerance(int n) {
  double s = 64.0 / n;
  return 1e-3 * s * s * s * s;
}

}  // namespace cp2harm

#endif
