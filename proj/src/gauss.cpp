#include "cp2harm/gauss.hpp"

namespace cp2harm {

namespace {

BiVec3 apply(const BiVec3& v, Dir d) { return d == Dir::kDz ? dz(v) : dzbar(v); }

// A_psi(Psi) with the norm denominator cleared:
//   X = <Psi,Psi> dPsi - <dPsi,Psi> Psi,   section value X / <Psi,Psi>.
BiVec3 sff_self_numerator(const BiVec3& psi, Dir d) {
  BiPoly n = herm_pair(psi, psi);
  BiVec3 dpsi = apply(psi, d);
  BiPoly a = herm_pair(dpsi, psi);
  return dpsi.scaled(n) - psi.scaled(a);
}

// n^2 (nabla_d2 of the complement-valued form built with d1)(Phi):
//   n * d2(X) - (d2(n) + <d2 Phi, Phi>) X - <d2 X, Phi> Phi
// where X is the cleared A-form numerator for direction d1.
BiVec3 connection_numerator(const BiVec3& phi, Dir d1, Dir d2) {
  BiPoly n = herm_pair(phi, phi);
  BiVec3 x = sff_self_numerator(phi, d1);
  BiVec3 d2x = apply(x, d2);
  BiPoly d2n = d2 == Dir::kDz ? n.dz() : n.dzbar();
  BiPoly a = herm_pair(apply(phi, d2), phi);
  return d2x.scaled(n) - x.scaled(d2n + a) - phi.scaled(herm_pair(d2x, phi));
}

}  // namespace

BiVec3 gauss_prime_rep(const HoloCurve& f) {
  if (!f.full()) throw Error("Gauss transform requires a full curve");
  BiVec3 fv = promote_z(f.f());
  BiVec3 fp = promote_z(derivative(f.f()));
  BiPoly n = herm_pair(fv, fv);
  BiPoly a = herm_pair(fp, fv);
  return fp.scaled(n) - fv.scaled(a);
}

BiVec3 g_curve(const HoloCurve& f) {
  if (!f.full()) throw Error("Gauss transform requires a full curve");
  const UniVec3& w = f.reduced_w();
  return {BiPoly::from_zbar(w[0].conj_coeffs()),
          BiPoly::from_zbar(w[1].conj_coeffs()),
          BiPoly::from_zbar(w[2].conj_coeffs())};
}

SffNumerator sff_into_line(const BiVec3& target, Dir dir, const BiVec3& section) {
  BiVec3 ds = apply(section, dir);
  BiPoly a = herm_pair(ds, target);
  return {target.scaled(a), herm_pair(target, target)};
}

SffNumerator sff_into_complement(const BiVec3& line, Dir dir, const BiVec3& section) {
  BiPoly n = herm_pair(line, line);
  BiVec3 ds = apply(section, dir);
  BiPoly a = herm_pair(ds, line);
  return {ds.scaled(n) - line.scaled(a), n};
}

BiVec3 harmonicity_numerator_rep(const BiVec3& phi) {
  return connection_numerator(phi, Dir::kDz, Dir::kDzbar);
}

BiVec3 harmonicity_numerator(const HoloCurve& f) {
  return harmonicity_numerator_rep(gauss_prime_rep(f));
}

BiPoly isotropy_numerator_rep(const BiVec3& phi, int alpha, int beta) {
  if (alpha < 0 || alpha > 1 || beta < 0 || beta > 1)
    throw Error("isotropy order out of range");
  BiVec3 u = alpha == 0 ? sff_self_numerator(phi, Dir::kDz)
                        : connection_numerator(phi, Dir::kDz, Dir::kDz);
  BiVec3 v = beta == 0 ? sff_self_numerator(phi, Dir::kDzbar)
                       : connection_numerator(phi, Dir::kDzbar, Dir::kDzbar);
  return herm_pair(u, v);
}

BiPoly isotropy_numerator(const HoloCurve& f, int alpha, int beta) {
  return isotropy_numerator_rep(gauss_prime_rep(f), alpha, beta);
}

bool adjoint_check_rep(const BiVec3& f_rep, const BiVec3& phi) {
  BiPoly lhs = herm_pair(dz(f_rep), phi);
  BiPoly rhs = herm_pair(dzbar(phi), f_rep);
  return (lhs + rhs.conj_swap()).is_zero();
}

bool adjoint_check(const HoloCurve& f) {
  return adjoint_check_rep(promote_z(f.f()), gauss_prime_rep(f));
}

HarmonicRep make_harmonic_rep(const HoloCurve& f) {
  return {f, gauss_prime_rep(f), g_curve(f), f.reduced_w(), f.plucker()};
}

std::vector<ExactCheck> verify_identities(const HoloCurve& f) {
  HarmonicRep rep = make_harmonic_rep(f);
  const BiVec3 fv = promote_z(f.f());
  const BiVec3& phi = rep.phi;
  const BiVec3& g = rep.g;

  std::vector<ExactCheck> checks;
  auto add = [&checks](std::string name, bool pass) {
    checks.push_back({std::move(name), pass});
  };

  add("orthogonality <phi,f>", herm_pair(phi, fv).is_zero());
  add("orthogonality <g,f>", herm_pair(g, fv).is_zero());
  add("orthogonality <g,phi>", herm_pair(g, phi).is_zero());

  add("diagram A'_{f,g} = 0", sff_into_line(g, Dir::kDz, fv).numerator.is_zero());
  add("diagram A'_{phi,f} = 0", sff_into_line(fv, Dir::kDz, phi).numerator.is_zero());
  add("diagram A'_g = 0", sff_into_complement(g, Dir::kDz, g).numerator.is_zero());
  add("diagram A'_{g,phi} = 0", sff_into_line(phi, Dir::kDz, g).numerator.is_zero());
  add("diagram A'_{g,f} = 0", sff_into_line(fv, Dir::kDz, g).numerator.is_zero());

  BiVec3 a_f = sff_into_complement(fv, Dir::kDz, fv).numerator;
  add("gauss image Im A'_f = phi", !a_f.is_zero() && proportional(a_f, phi));

  add("harmonicity numerator = 0", harmonicity_numerator_rep(phi).is_zero());

  for (int alpha = 0; alpha <= 1; ++alpha)
    for (int beta = 0; beta <= 1; ++beta)
      add("isotropy (" + std::to_string(alpha) + "," + std::to_string(beta) + ")",
          isotropy_numerator_rep(phi, alpha, beta).is_zero());

  add("adjoint identity", adjoint_check_rep(fv, phi));

  BiVec3 a_back = sff_into_complement(phi, Dir::kDzbar, phi).numerator;
  add("inversion Im A''_phi = f", !a_back.is_zero() && proportional(a_back, fv));

  int g_deg = -1;
  for (int i = 0; i < 3; ++i) g_deg = std::max(g_deg, rep.w[i].degree());
  add("deg g = k'", g_deg == rep.invariants.k_prime);

  return checks;
}

}  // namespace cp2harm
