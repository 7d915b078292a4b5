#include "cp2harm/energy.hpp"

#include <cmath>
#include <numbers>

#include "cp2harm/parallel.hpp"

namespace cp2harm {

SampledMap sample_map(const LineMap& map, const ChartGrid& grid) {
  SampledMap s;
  s.grid = &grid;
  s.jets.resize(grid.nodes().size());
  double h = grid.fd_step();
  parallel_for(grid.nodes().size(), [&](std::size_t i) {
    const GridNode& node = grid.nodes()[i];
    s.jets[i] = map_jet(make_frame(map, node.chart, node.zeta, h));
  });
  return s;
}

namespace {

double conformal2(const GridNode& node) {
  double r2 = std::norm(node.zeta);
  return (1.0 + r2) * (1.0 + r2);
}

}  // namespace

double fs_energy(const SampledMap& map) {
  const auto& nodes = map.grid->nodes();
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const MapJet& j = map.jets[i];
    terms[i] = nodes[i].weight * conformal2(nodes[i]) *
               (j.dp.squaredNorm() + j.dpp.squaredNorm());
  }
  return pairwise_sum(terms);
}

double fs_degree(const SampledMap& map) {
  const auto& nodes = map.grid->nodes();
  std::vector<double> terms(nodes.size());
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const MapJet& j = map.jets[i];
    terms[i] = nodes[i].weight * conformal2(nodes[i]) *
               (j.dp.squaredNorm() - j.dpp.squaredNorm());
  }
  return pairwise_sum(terms) / (4.0 * std::numbers::pi);
}

double tension_residual(const SampledMap& map) {
  const auto& nodes = map.grid->nodes();
  double sup = 0.0;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    double t = conformal2(nodes[i]) * 2.0 * map.jets[i].tension_rep().norm();
    sup = std::max(sup, t);
  }
  return sup;
}

}  // namespace cp2harm
