#ifndef CP2HARM_SELFTEST_HPP
#define CP2HARM_SELFTEST_HPP

#include "cp2harm/pipeline.hpp"
#include "cp2harm/report.hpp"

namespace cp2harm {

namespace builtin {
HoloCurve veronese();  // (1, z, z^2)
HoloCurve cubic();     // (1, z, z^3)
HoloCurve line();      // (1, z, 0), not full
}  // namespace builtin

/// The verification suite: each check appends pass/fail records to the
/// report. Resolutions default to the values the thresholds are pinned at.
void check_exact_suite(RunReport& rep);
void check_degrees(RunReport& rep);
void check_energy_calibration(RunReport& rep, int grid = 32);
void check_tension_convergence(RunReport& rep, int grid = 32);
void check_integrator(RunReport& rep, int cases = 100, unsigned seed = 20240811);
void check_jacobi_generation(RunReport& rep, int grid = 64);
void check_nullity(RunReport& rep, int grid = 32);
void check_roundtrip(RunReport& rep, int grid = 64);
void check_lemma51(RunReport& rep, int grid = 32);

/// Runs every check; base = 32 reproduces the pinned resolutions
/// (energy and nullity at base, tension and lemma51 at base -> 2 base,
/// Jacobi generation and roundtrip at 2 base -> 3 base).
void run_selftest(RunReport& rep, int base = 32);

}  // namespace cp2harm

#endif
