#pragma once

#include <vector>

#include <Eigen/Dense>

#include "torsionlab/errors.hpp"
#include "torsionlab/su2.hpp"

namespace torsionlab {

// A finite based chain complex of real vector spaces
//   0 -> C_N -> ... -> C_1 -> C_0 -> 0,
// each C_i carrying its standard basis, together with explicit homology-basis
// vectors per degree.  boundaries[i] is the matrix of d_{i+1}: C_{i+1} -> C_i.
struct BasedChainComplex {
    std::vector<int> dims;                                    // n_0 .. n_N
    std::vector<Eigen::MatrixXd> boundaries;                  // length N
    std::vector<std::vector<Eigen::VectorXd>> homology_bases; // length N+1

    int top_degree() const { return static_cast<int>(dims.size()) - 1; }
};

struct RankFactors {
    int rank = 0;
    Eigen::MatrixXd kernel;  // orthonormal columns spanning ker M
    Eigen::MatrixXd image;   // orthonormal columns spanning im M
};

// Numerical rank against tol * (largest singular value).
RankFactors rank_kernel_image(const Eigen::MatrixXd& m, double tol);

// Shape, chain-condition and homology-basis (cycle + class independence)
// checks; throws DegenerateComplex / InvalidBasis.
void validate_complex(const BasedChainComplex& c, double rank_tol = kRankTolDefault,
                      double chain_tol = kChainTol);

// Reidemeister torsion per Eq. (3):
//   tor = prod_i det[b^i h~^i b~^{i-1} / c^i]^{(-1)^{i+1}},
// with b^i an orthonormal image basis, lifts by least squares, h~^i the given
// homology vectors.  Independent of all those choices.
double torsion(const BasedChainComplex& c, double rank_tol = kRankTolDefault);

struct TorsionResult {
    double value = 0.0;        // (-1)^{|C|} * tor
    double tor = 0.0;          // unsigned Eq. (3) value
    int sign_exponent = 0;     // |C_*| mod 2
    std::vector<long long> alpha;  // cumulative chain dimensions
    std::vector<long long> beta;   // cumulative homology dimensions
};

// Eq. (6): Tor = (-1)^{|C_*|} tor with |C_*| = sum_i alpha_i(C) beta_i(C).
TorsionResult sign_determined_torsion(const BasedChainComplex& c,
                                      double rank_tol = kRankTolDefault);

// Replaces the homology bases after checking the cycle/independence
// invariants (InvalidBasis otherwise).  Chain bases stay the standard ones.
BasedChainComplex change_homology_basis(const BasedChainComplex& c,
                                        std::vector<std::vector<Eigen::VectorXd>> new_bases,
                                        double rank_tol = kRankTolDefault);

}  // namespace torsionlab
