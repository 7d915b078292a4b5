#include "cp2harm/jacobi.hpp"

#include "cp2harm/curvature.hpp"
#include "cp2harm/parallel.hpp"

namespace cp2harm {

std::size_t SampledField::valid_count() const {
  std::size_t n = 0;
  for (auto f : valid) n += f;
  return n;
}

SampledField sample_field(const TangentField& field, const SampledMap& sampled) {
  const ChartGrid& grid = *sampled.grid;
  SampledField out;
  out.values.resize(grid.nodes().size());
  out.valid.assign(grid.nodes().size(), 1);
  parallel_for(grid.nodes().size(), [&](std::size_t i) {
    const GridNode& node = grid.nodes()[i];
    out.values[i] = field.value(node.chart, node.zeta, sampled.jets[i].psi);
  });
  return out;
}

Vec3c jacobi_apply_point(const MapJet& mj, const FieldJet& fj, double c2) {
  Vec3c s = second_sym(mj, fj);
  Vec3c wx = mj.dp + mj.dpp;
  Vec3c wy = complexd(0.0, 1.0) * (mj.dp - mj.dpp);
  Vec3c tr = curvature_apply(fj.v, wx, wx) + curvature_apply(fj.v, wy, wy);
  return -0.5 * c2 * s - 0.25 * c2 * tr;
}

SampledField jacobi_apply(const LineMap& map, const TangentField& field,
                          const SampledMap& sampled) {
  const ChartGrid& grid = *sampled.grid;
  SampledField out;
  out.values.resize(grid.nodes().size());
  out.valid.assign(grid.nodes().size(), 1);
  double h = grid.fd_step();
  parallel_for(grid.nodes().size(), [&](std::size_t i) {
    const GridNode& node = grid.nodes()[i];
    JetFrame fr = make_frame(map, node.chart, node.zeta, h);
    const MapJet& mj = sampled.jets[i];
    FieldJet fj = field_jet(fr, mj, field);
    out.values[i] = jacobi_apply_point(mj, fj, fr.conformal2());
  });
  return out;
}

double jacobi_residual(const LineMap& map, const TangentField& field,
                       const SampledMap& sampled) {
  SampledField jf = jacobi_apply(map, field, sampled);
  double sup = 0.0;
  for (std::size_t i = 0; i < jf.values.size(); ++i)
    if (jf.valid[i]) sup = std::max(sup, fs_norm(jf.values[i]));
  return sup;
}

}  // namespace cp2harm
