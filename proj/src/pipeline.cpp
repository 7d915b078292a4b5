#include "cp2harm/pipeline.hpp"

#include <cmath>
#include <memory>

#include "cp2harm/curvature.hpp"
#include "cp2harm/parallel.hpp"

namespace cp2harm {

namespace {

constexpr complexd kI{0.0, 1.0};

Mat3c projector_diff(const LineMap& plus, const LineMap& minus, Chart chart,
                     complexd zeta, double dt) {
  return (plus.projector(chart, zeta) - minus.projector(chart, zeta)) / (2.0 * dt);
}

struct RichardsonSlope {
  Mat3c slope;
  double disagreement;
};

RichardsonSlope projector_slope(const std::array<LineMap, 4>& members, Chart chart,
                                complexd zeta, double dt) {
  // members: t = -dt, -dt/2, +dt/2, +dt
  Mat3c d1 = projector_diff(members[3], members[0], chart, zeta, dt);
  Mat3c d2 = projector_diff(members[2], members[1], chart, zeta, dt / 2.0);
  return {(4.0 * d2 - d1) / 3.0, (d2 - d1).norm()};
}

std::array<LineMap, 4> family_members(const TripleFamily& fam, Transform tr, double dt) {
  auto make = [&](double t) {
    return tr == Transform::kGaussPrime ? LineMap::gauss_of_family(fam, t)
                                        : LineMap::curve_of_family(fam, t);
  };
  return {make(-dt), make(-dt / 2.0), make(dt / 2.0), make(dt)};
}

}  // namespace

LineMap transformed_map(const HoloCurve& f, Transform tr) {
  return tr == Transform::kGaussPrime ? LineMap::gauss_of_curve(f)
                                      : LineMap::from_curve(f);
}

std::vector<PolyTripleD> coefficient_directions(const HoloCurve& f) {
  const int k = f.degree_k();
  const int ncoef = 3 * (k + 1);
  PolyTripleD base = PolyTripleD::from_exact(f.f(), k);

  auto flatten = [ncoef, k](const PolyTripleD& t) {
    Eigen::VectorXd r(2 * ncoef);
    for (int m = 0; m < 3; ++m)
      for (int p = 0; p <= k; ++p) {
        complexd c = p < static_cast<int>(t.c[m].size()) ? t.c[m][p] : complexd(0);
        r[2 * (m * (k + 1) + p)] = c.real();
        r[2 * (m * (k + 1) + p) + 1] = c.imag();
      }
    return r;
  };
  auto unflatten = [k](const Eigen::VectorXd& r) {
    PolyTripleD t;
    for (int m = 0; m < 3; ++m) {
      t.c[m].resize(k + 1);
      for (int p = 0; p <= k; ++p)
        t.c[m][p] = complexd(r[2 * (m * (k + 1) + p)], r[2 * (m * (k + 1) + p) + 1]);
    }
    return t;
  };

  // Directions along F and iF only rescale the representative; remove them.
  std::vector<Eigen::VectorXd> kept;
  Eigen::VectorXd vf = flatten(base);
  Eigen::VectorXd vif = flatten(base.scaled(kI));
  vf.normalize();
  vif -= vif.dot(vf) * vf;
  vif.normalize();

  std::vector<PolyTripleD> out;
  for (int m = 0; m < 3; ++m)
    for (int p = 0; p <= k; ++p)
      for (int s = 0; s < 2; ++s) {
        PolyTripleD cand;
        cand.c[m].assign(k + 1, 0.0);
        cand.c[m][p] = s == 0 ? complexd(1, 0) : complexd(0, 1);
        for (int mm = 0; mm < 3; ++mm)
          if (mm != m) cand.c[mm].assign(k + 1, 0.0);
        Eigen::VectorXd v = flatten(cand);
        v -= v.dot(vf) * vf;
        v -= v.dot(vif) * vif;
        for (const auto& u : kept) v -= v.dot(u) * u;
        if (v.norm() < 1e-9) continue;
        v.normalize();
        kept.push_back(v);
        out.push_back(unflatten(v));
      }
  return out;
}

TripleFamily coefficient_family(const HoloCurve& f, const PolyTripleD& df) {
  TripleFamily fam;
  int deg = std::max(f.degree_k(), df.max_degree());
  fam.powers = {PolyTripleD::from_exact(f.f(), deg), df};
  // pad the direction so the reversal degree is shared
  for (int i = 0; i < 3; ++i) fam.powers[1].c[i].resize(deg + 1, 0.0);
  return fam;
}

TangentField curve_coeff_field(const HoloCurve& f, const PolyTripleD& df) {
  int k = f.degree_k();
  PolyTripleD fz = PolyTripleD::from_exact(f.f(), k);
  PolyTripleD fw = fz.reversed(k);
  PolyTripleD dfz = df;
  for (int i = 0; i < 3; ++i) dfz.c[i].resize(k + 1, 0.0);
  PolyTripleD dfw = dfz.reversed(k);
  return TangentField([fz, fw, dfz, dfw](Chart chart, complexd zeta, const Vec3c& gauge) {
    Vec3c fv = chart == Chart::kZ ? fz.eval(zeta) : fw.eval(zeta);
    Vec3c dv = chart == Chart::kZ ? dfz.eval(zeta) : dfw.eval(zeta);
    double n = fv.norm();
    Vec3c fhat = fv / n;
    Vec3c v_nat = (dv - fhat.dot(dv) * fhat) / n;
    return Vec3c(fhat.dot(gauge) * v_nat);
  });
}

TangentField push_field(const TripleFamily& fam, Transform tr, double t_step) {
  auto members = std::make_shared<std::array<LineMap, 4>>(family_members(fam, tr, t_step));
  double dt = t_step;
  return TangentField([members, dt](Chart chart, complexd zeta, const Vec3c& gauge) {
    RichardsonSlope rs = projector_slope(*members, chart, zeta, dt);
    Vec3c v = rs.slope * gauge;
    return Vec3c(v - gauge.dot(v) * gauge);
  });
}

SampledField push_field_sampled(const TripleFamily& fam, Transform tr,
                                const SampledMap& base, double t_step) {
  auto members = family_members(fam, tr, t_step);
  const ChartGrid& grid = *base.grid;
  SampledField out;
  out.values.resize(grid.nodes().size());
  out.valid.assign(grid.nodes().size(), 1);
  parallel_for(grid.nodes().size(), [&](std::size_t i) {
    const GridNode& node = grid.nodes()[i];
    RichardsonSlope rs = projector_slope(members, node.chart, node.zeta, t_step);
    const Vec3c& gauge = base.jets[i].psi;
    Vec3c v = rs.slope * gauge;
    out.values[i] = v - gauge.dot(v) * gauge;
    if (rs.disagreement > 1e-3 * std::max(1.0, rs.slope.norm())) out.valid[i] = 0;
  });
  return out;
}

double prop41_residual(const LineMap& map, const TangentField& v,
                       const SampledMap& sampled) {
  const ChartGrid& grid = *sampled.grid;
  double h = grid.fd_step();
  std::vector<double> vals(grid.nodes().size());
  parallel_for(grid.nodes().size(), [&](std::size_t i) {
    const GridNode& node = grid.nodes()[i];
    JetFrame fr = make_frame(map, node.chart, node.zeta, h);
    FieldJet fj = field_jet(fr, sampled.jets[i], v);
    double r2 = std::norm(node.zeta);
    vals[i] = (1.0 + r2) * covariant_dpp(sampled.jets[i], fj).norm();
  });
  double sup = 0.0;
  for (double x : vals) sup = std::max(sup, x);
  return sup;
}

namespace {

struct PullResult {
  Vec3c u_nat;   // variation rep in the natural gauge of f
  Vec3c f_hat;   // unit rep of the f-line at the point
};

PullResult pull_point(const LineMap& phi_map, const TangentField& v, Chart chart,
                      complexd zeta, double h) {
  JetFrame fr = make_frame(phi_map, chart, zeta, h);
  MapJet mj = map_jet(fr);
  FieldJet fj = field_jet(fr, mj, v);

  Vec3c q0 = mj.dpp;
  double qn = q0.norm();
  if (qn < 1e-10)
    throw Error("node in Sigma'' (d''phi vanishes); excluded from the pull");
  Vec3c fhat = q0 / qn;

  complexd c = mj.psi.dot(fj.raw_dpp) + fj.v.dot(mj.raw_dpp);
  Vec3c qdot = fj.raw_dpp - c * mj.psi - mj.a_pp * fj.v;
  Vec3c u = (qdot - fhat.dot(qdot) * fhat) / qn;
  return {u, fhat};
}

}  // namespace

TangentField pull_step1(const LineMap& phi_map, const TangentField& v, double h) {
  const LineMap map = phi_map;
  TangentField vv = v;
  return TangentField([map, vv, h](Chart chart, complexd zeta, const Vec3c& gauge) {
    PullResult pr = pull_point(map, vv, chart, zeta, h);
    return Vec3c(pr.f_hat.dot(gauge) * pr.u_nat);
  });
}

std::array<complexd, 2> pull_affine_components(const LineMap& phi_map,
                                               const TangentField& v, Chart chart,
                                               complexd zeta, double h) {
  PullResult pr = pull_point(phi_map, v, chart, zeta, h);
  complexd f0 = pr.f_hat[0];
  if (std::abs(f0) < 1e-10) throw Error("affine chart degenerate at this point");
  return {(pr.u_nat[1] * f0 - pr.u_nat[0] * pr.f_hat[1]) / (f0 * f0),
          (pr.u_nat[2] * f0 - pr.u_nat[0] * pr.f_hat[2]) / (f0 * f0)};
}

namespace {

mpq_class rationalize(double x, long max_den) {
  // continued-fraction convergents with bounded denominator
  if (!std::isfinite(x)) throw Error("cannot rationalize a non-finite value");
  bool neg = x < 0;
  double a = std::abs(x);
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double frac = a;
  for (int it = 0; it < 64; ++it) {
    double fl = std::floor(frac);
    if (fl > 1e15) break;
    long ai = static_cast<long>(fl);
    if (q1 > 0 && (ai > (max_den - q0) / q1 || std::abs(p1) > (1L << 60) / std::max(ai, 1L)))
      break;
    long p2 = ai * p1 + p0, q2 = ai * q1 + q0;
    p0 = p1; q0 = q1; p1 = p2; q1 = q2;
    double rem = frac - fl;
    if (rem < 1e-15) break;
    frac = 1.0 / rem;
  }
  if (q1 == 0) return mpq_class(0);
  mpq_class r(p1, q1);
  r.canonicalize();
  return neg ? mpq_class(-r) : r;
}

}  // namespace

RationalFit fit_rational_field(const LineMap& phi_map, const TangentField& v,
                               const AffineForm& affine, const ChartGrid& grid,
                               int deg_bound, double h) {
  std::vector<complexd> zs;
  std::vector<std::array<complexd, 2>> samples;
  for (const GridNode& node : grid.nodes()) {
    if (node.chart != Chart::kZ) continue;
    zs.push_back(node.zeta);
    samples.push_back(pull_affine_components(phi_map, v, Chart::kZ, node.zeta, h));
  }
  const int rows = static_cast<int>(zs.size());
  const int cols = deg_bound + 1;
  Eigen::MatrixXcd vand(rows, cols);
  for (int i = 0; i < rows; ++i) {
    complexd zp = 1.0;
    for (int j = 0; j < cols; ++j) {
      vand(i, j) = zp;
      zp *= zs[i];
    }
  }
  auto qr = vand.colPivHouseholderQr();

  RationalFit fit;
  fit.fit_residual = 0.0;
  fit.snap_distance = 0.0;
  for (int j = 0; j < 2; ++j) {
    Eigen::VectorXcd rhs(rows);
    for (int i = 0; i < rows; ++i) {
      complexd q = 0.0;
      {
        complexd acc = 0.0;
        for (int n = affine.q[j].degree(); n >= 0; --n)
          acc = acc * zs[i] + affine.q[j].coeff(n).to_complex();
        q = acc;
      }
      rhs[i] = samples[i][j] * q * q;
    }
    Eigen::VectorXcd coef = qr.solve(rhs);
    fit.fit_residual = std::max(fit.fit_residual, (vand * coef - rhs).cwiseAbs().maxCoeff());

    std::vector<GaussianRational> exact(cols);
    for (int n = 0; n < cols; ++n) {
      // double-faithful rationalization: the snapped value carries the full
      // finite-difference error of the fit, so the regenerated family
      // reflects the measured pull, not an idealized one
      mpq_class re = rationalize(coef[n].real(), 10000000000L);
      mpq_class im = rationalize(coef[n].imag(), 10000000000L);
      fit.snap_distance = std::max(
          fit.snap_distance, std::abs(coef[n] - complexd(re.get_d(), im.get_d())));
      exact[n] = GaussianRational(re, im);
    }
    fit.field.numerator[j] = UniPoly(std::move(exact));
  }
  return fit;
}

Lemma51Report lemma51_checks(const MapFamily& fam, const ChartGrid& grid,
                             double t_step) {
  const double dt = t_step;
  const std::array<double, 4> ts = {-2 * dt, -dt, dt, 2 * dt};
  std::array<LineMap, 4> members = {fam(ts[0]), fam(ts[1]), fam(ts[2]), fam(ts[3])};
  LineMap center = fam(0.0);
  double h = grid.fd_step();

  struct NodeVals {
    double d1, d2, d3, d4, t0;
  };
  std::vector<NodeVals> vals(grid.nodes().size());
  parallel_for(grid.nodes().size(), [&](std::size_t i) {
    const GridNode& node = grid.nodes()[i];
    std::array<complexd, 4> p1, p2, p3, p4;
    for (int s = 0; s < 4; ++s) {
      MapJet j = map_jet(make_frame(members[s], node.chart, node.zeta, h));
      Vec3c tau = j.tension_rep();
      p1[s] = 4.0 * j.dpp.dot(j.dp);
      p2[s] = 4.0 * (j.dpp.dot(tau) + tau.dot(j.dp));
      p3[s] = 4.0 * j.dpp.dot(j.ddp_perp);
      p4[s] = 4.0 * j.ddpp_perp.dot(j.dp);
    }
    // 4-point central first derivative in t
    auto ddt = [dt](const std::array<complexd, 4>& g) {
      return std::abs((8.0 * (g[2] - g[1]) - (g[3] - g[0])) / (12.0 * dt));
    };
    MapJet j0 = map_jet(make_frame(center, node.chart, node.zeta, h));
    vals[i] = {ddt(p1), ddt(p2), ddt(p3), ddt(p4),
               std::abs(4.0 * j0.dpp.dot(j0.dp))};
  });

  Lemma51Report rep{0, 0, 0, 0, 0};
  for (const auto& v : vals) {
    rep.d_pairing = std::max(rep.d_pairing, v.d1);
    rep.d_dzbar_pairing = std::max(rep.d_dzbar_pairing, v.d2);
    rep.d_cubic_a = std::max(rep.d_cubic_a, v.d3);
    rep.d_cubic_b = std::max(rep.d_cubic_b, v.d4);
    rep.t0_pairing = std::max(rep.t0_pairing, v.t0);
  }
  return rep;
}

NullityReport nullity_rank(const LineMap& map, const std::vector<TangentField>& fields,
                           const ChartGrid& grid, double jacobi_tol, double rank_tol) {
  NullityReport rep;
  rep.jacobi_tol = jacobi_tol;
  rep.rank_tol = rank_tol;
  if (fields.empty()) return rep;

  SampledMap base = sample_map(map, grid);
  std::vector<SampledField> sampled;
  sampled.reserve(fields.size());
  for (std::size_t i = 0; i < fields.size(); ++i) {
    double res = jacobi_residual(map, fields[i], base);
    rep.residuals.push_back(res);
    if (res > jacobi_tol)
      throw Error("field " + std::to_string(i) + " fails the Jacobi residual bound (" +
                  std::to_string(res) + " > " + std::to_string(jacobi_tol) + ")");
    sampled.push_back(sample_field(fields[i], base));
  }

  const int m = static_cast<int>(fields.size());
  Eigen::MatrixXd gram(m, m);
  const auto& nodes = grid.nodes();
  for (int a = 0; a < m; ++a)
    for (int b = a; b < m; ++b) {
      std::vector<double> terms(nodes.size());
      for (std::size_t i = 0; i < nodes.size(); ++i)
        terms[i] = nodes[i].weight *
                   4.0 * std::real(sampled[b].values[i].dot(sampled[a].values[i]));
      gram(a, b) = gram(b, a) = pairwise_sum(terms);
    }

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  Eigen::VectorXd ev = es.eigenvalues().reverse();
  double top = std::max(ev[0], 0.0);
  for (int i = 0; i < m; ++i) {
    rep.eigenvalues.push_back(ev[i]);
    if (ev[i] > rank_tol * top) ++rep.rank;
  }
  return rep;
}

RoundtripReport pipeline_roundtrip(const HoloCurve& f, const UniVec3& direction,
                                   const ChartGrid& grid, double t_step) {
  if (!f.full()) throw Error("roundtrip requires a full curve");
  if (f.ramification_r() != 0) {
    UniVec3 nudged = f.f();
    GaussianRational eps(1, 16, 0, 1);
    for (int i = 0; i < 3; ++i) nudged[i] = nudged[i] + direction[i] * eps;
    HoloCurve moved = HoloCurve::make(nudged);
    if (!moved.full() || moved.ramification_r() != f.ramification_r())
      throw Error("leaves Hol*_{k,r}");
    throw Error("Hol*_{k,r} projection for r > 0 unsupported");
  }

  PolyTripleD df = PolyTripleD::from_exact(direction, f.degree_k());
  TripleFamily fam1 = coefficient_family(f, df);
  SampledMap base = sample_map(LineMap::gauss_of_curve(f), grid);
  SampledField v = push_field_sampled(fam1, Transform::kGaussPrime, base, t_step);
  TangentField v_fn = push_field(fam1, Transform::kGaussPrime, t_step);

  AffineForm affine = affine_form(f);
  LineMap phi_map = LineMap::gauss_of_curve(f);
  RationalFit fit = fit_rational_field(phi_map, v_fn, affine, grid,
                                       2 * f.degree_k(), grid.fd_step());

  DeformationFamily regen = integrate_holo_field(affine, fit.field);
  if (!regen.derivative_matches(fit.field))
    throw Error("integrated family fails the exact derivative identity");
  SampledField v2 =
      push_field_sampled(regen.triple_family(), Transform::kGaussPrime, base, t_step);

  RoundtripReport rep;
  rep.fit_residual = fit.fit_residual;
  rep.snap_distance = fit.snap_distance;
  rep.total_nodes = grid.nodes().size();
  rep.valid_nodes = 0;
  rep.discrepancy = 0.0;
  for (std::size_t i = 0; i < grid.nodes().size(); ++i) {
    if (!v.valid[i] || !v2.valid[i]) continue;
    ++rep.valid_nodes;
    rep.discrepancy = std::max(rep.discrepancy, fs_norm(v2.values[i] - v.values[i]));
  }

  // Same first-order term, different family: add an O(t^2) wobble.
  TripleFamily fam3 = fam1;
  fam3.powers.push_back(fam1.powers[0].scaled(0.3) + df.scaled(complexd(0.1, 0.2)));
  for (auto& comp : fam3.powers.back().c) comp.resize(fam1.powers[0].max_degree() + 1, 0.0);
  SampledField v3 = push_field_sampled(fam3, Transform::kGaussPrime, base, t_step);
  rep.independence = 0.0;
  for (std::size_t i = 0; i < grid.nodes().size(); ++i) {
    if (!v.valid[i] || !v3.valid[i]) continue;
    rep.independence = std::max(rep.independence, fs_norm(v3.values[i] - v.values[i]));
  }
  return rep;
}

}  // namespace cp2harm
