#pragma once

#include <vector>

#include "torsionlab/chain.hpp"
#include "torsionlab/fox.hpp"
#include "torsionlab/presentation.hpp"

namespace torsionlab {

// The twisted complex X^rho_* of Eq. (13), re-indexed as a chain complex
// X_i = C^{2-i}:  dims (3(r-1), 3r, 3), d_2 stacks (I - Ad_{rho(S_j)}),
// d_1 has 3x3 blocks Ad(dR_i/dS_j).
struct TwistedComplex {
    BasedChainComplex complex;
    GroupPresentation presentation;
    Representation rep;
};

TwistedComplex twisted_complex(const GroupPresentation& p, const Representation& rho);

// Twisted-cohomology dimensions (b0, b1, b2) with H^k = H_{2-k}(X_*), plus
// orthonormal representative cocycles per cohomological degree.
struct CohomologySummary {
    int b0 = 0, b1 = 0, b2 = 0;
    Eigen::MatrixXd h0_reps;  // in X_2 = su(2)
    Eigen::MatrixXd h1_reps;  // in X_1 = su(2)^r
    Eigen::MatrixXd h2_reps;  // in X_0 = su(2)^{r-1}
};

CohomologySummary twisted_cohomology(const TwistedComplex& t, double rank_tol = kRankTolDefault);

// False iff all generator images share an axis (pairwise commuting).
bool is_irreducible(const Representation& rho);

// Irreducible and dim H^1 = 1.
bool is_regular(const TwistedComplex& t, double rank_tol = kRankTolDefault);

// Extends a 1-cochain (values on generators) to a word by the twisted
// derivation rule d(g1 g2) = d(g1) + Ad_{rho(g1)} d(g2).
Eigen::Vector3d evaluate_cocycle(const std::vector<UnitQuaternion>& images,
                                 const Eigen::VectorXd& v, const Word& w);

// f^rho_mu(v) = <v(mu), P^rho> with P^rho the axis of rho(mu).
double f_mu(const TwistedComplex& t, const Eigen::VectorXd& v, const Word& mu);

bool is_mu_regular(const TwistedComplex& t, const Word& mu, double rank_tol = kRankTolDefault);

// H^1 representative rescaled so f_mu = +1.
Eigen::VectorXd reference_h1(const TwistedComplex& t, const Word& mu,
                             double rank_tol = kRankTolDefault);

// The identity-sequence realization of the boundary-torus pullback on
// 2-cochains: i*(z_1..z_{r-1}) = sum_k sign_k Ad_{rho(u_k)}(z_{j_k}).
Eigen::Vector3d i_star(const TwistedComplex& t, const Eigen::VectorXd& z);

// H^2 representative normalized so <i*(w), P^rho> = +1 (Eq. 12).
Eigen::VectorXd reference_h2(const TwistedComplex& t, double rank_tol = kRankTolDefault);

// Untwisted complex 0 -> R -> R^r -> R^{r-1} -> 0 with homology based by
// {[[pt]], m*}; tau0 is the sign of its sign-determined torsion.
BasedChainComplex untwisted_complex(const GroupPresentation& p);
int tau0(const GroupPresentation& p);

// tau0 * sign-determined torsion of X^rho_* based by {reference_h2,
// reference_h1(meridian)}; the paper's TOR(M_K; Ad rho, ...).
double nonabelian_torsion(const GroupPresentation& p, const Representation& rho,
                          double rank_tol = kRankTolDefault);

// phi_theta: S_j -> cos(n_j theta) + sin(n_j theta) i.
Representation abelian_rep(const GroupPresentation& p, double theta);

// tau0 * sign-determined torsion of X^{phi_theta}_* based by h(0) = i,
// h(1) = sum n_j i_j; equals 4 sin^2(theta)/|Delta(e^{2i theta})|^2 (Eq. 11).
double abelian_torsion(const GroupPresentation& p, double theta,
                       double rank_tol = kRankTolDefault);

// rho_{l,t} on the torus knot group G_q.
Representation torus_rep(int q, int l, double t);

// Half the rotation angle of Ad(rho(mu)); CentralMeridian when rho(mu) = +-1.
double theta_mu(const Representation& rho, const Word& mu);

struct ScanRow {
    double t = 0, theta_m = 0, tor = 0, dtheta_dt = 0, tau_form = 0, closed_form = 0, abs_err = 0;
};

// Torsion across a t-grid with central-difference dtheta_m/dt (step h);
// closed_form = -(8/q) sin^2((2l-1)pi/q) * dtheta_dt.
std::vector<ScanRow> scan_torus(int q, int l, const std::vector<double>& t_grid, double h,
                                double rank_tol = kRankTolDefault);

}  // namespace torsionlab
