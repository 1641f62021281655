#pragma once

#include <random>
#include <string>
#include <vector>

#include "torsionlab/chain.hpp"
#include "torsionlab/knot.hpp"

namespace torsionlab {

struct CheckReport {
    std::string name;
    int trials = 0;
    unsigned long long seed = 0;
    double max_err = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::string detail;
};

// `seed: N  trials: N  max_err: X  tol: X  PASS/FAIL  detail`
std::string format_report(const CheckReport& r);

// A random based complex built as Q_i * (block form) * Q_i^-1 so that d*d = 0
// and the homology basis is exact by construction.  Degrees 0..top_degree,
// ranks 1..max_rank per boundary; `acyclic` forces all homology away.
BasedChainComplex random_based_complex(std::mt19937_64& rng, int top_degree, int max_rank,
                                       bool acyclic);

UnitQuaternion random_unit_quaternion(std::mt19937_64& rng);

// Eq. (3) independence of the choices of image basis, lift and cycle
// representative: re-evaluates with randomized choices.
CheckReport check_lift_independence(int trials, unsigned long long seed);
// Eq. (4): the left shift of an acyclic complex inverts the torsion.
CheckReport check_shift(int trials, unsigned long long seed);
// Eq. (5): homology basis change scales by prod det(P_i)^{(-1)^{i+1}}.
CheckReport check_basis_change(int trials, unsigned long long seed);
// Multiplicativity Lemma on random short exact sequences with coupling.
CheckReport check_multiplicativity(int trials, unsigned long long seed);
// Fox fundamental identity sum_j dW/dS_j (S_j - 1) = W - 1, exact.
CheckReport check_fox_identity(int trials, unsigned long long seed);
// Conjugation invariance of the nonabelian torsion on torus reps.
CheckReport check_conjugation(int trials, unsigned long long seed);
// Closed form -(8/q) sin^2((2l-1) pi/q) over the full (q, l, t) grid.
CheckReport check_torus_oracle();
// Eq. (11) against a numeric-determinant Alexander oracle (independent of the
// exact Laurent path), plus the 4/9, 4/25 and unknot spot values.
CheckReport check_alexander_oracle();

// All suites; trial counts are per-suite where applicable.
std::vector<CheckReport> run_checks(const std::vector<std::string>& names, int trials,
                                    unsigned long long seed);
std::vector<std::string> all_check_names();

// Wirtinger two-bridge presentations used by oracles and tests.
GroupPresentation trefoil_wirtinger();
GroupPresentation figure8_wirtinger();
GroupPresentation unknot_presentation();

}  // namespace torsionlab
