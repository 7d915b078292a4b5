#include "cp2harm/grid.hpp"

#include <cmath>
#include <numbers>

namespace cp2harm {

void gauss_legendre_01(int n, std::vector<double>& nodes, std::vector<double>& weights) {
  nodes.resize(n);
  weights.resize(n);
  // Newton iteration on P_n over [-1, 1], then map to [0, 1].
  for (int i = 0; i < n; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double pp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      pp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / pp;
      x -= dx;
      if (std::abs(dx) < 1e-15) break;
    }
    nodes[n - 1 - i] = 0.5 * (1.0 + x);
    weights[n - 1 - i] = 1.0 / ((1.0 - x * x) * pp * pp);
  }
}

ChartGrid ChartGrid::build(int n) {
  if (n < 8) throw Error("grid resolution must be at least 8");
  ChartGrid g;
  g.n_ = n;

  std::vector<double> u, wu;
  gauss_legendre_01(n, u, wu);

  const int n_theta = 2 * n;
  const double dtheta = 2.0 * std::numbers::pi / n_theta;
  g.nodes_.reserve(2 * n * n_theta);
  for (Chart chart : {Chart::kZ, Chart::kW}) {
    for (int i = 0; i < n; ++i) {
      // u = 2 rho^2 / (1 + rho^2), the equal-area radial variable of the cap
      double rho = std::sqrt(u[i] / (2.0 - u[i]));
      for (int j = 0; j < n_theta; ++j) {
        double theta = dtheta * (j + 0.5);
        g.nodes_.push_back({chart, std::polar(rho, theta), dtheta * wu[i]});
      }
    }
  }

  std::vector<double> w(g.nodes_.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = g.nodes_[i].weight;
  g.total_weight_ = pairwise_sum(w);
  return g;
}

double pairwise_sum(const std::vector<double>& values) {
  if (values.empty()) return 0.0;
  std::vector<double> acc = values;
  size_t m = acc.size();
  while (m > 1) {
    size_t half = m / 2;
    for (size_t i = 0; i < half; ++i) acc[i] = acc[2 * i] + acc[2 * i + 1];
    if (m % 2) {
      acc[half] = acc[m - 1];
      m = half + 1;
    } else {
      m = half;
    }
  }
  return acc[0];
}

}  // namespace cp2harm
