#include "torsionlab/knot.hpp"

#include <cmath>
#include <numbers>

namespace torsionlab {

TwistedComplex twisted_complex(const GroupPresentation& p, const Representation& rho) {
    validate_presentation(p);
    if (rho.rank() != p.rank()) throw InvalidParameter("representation does not match presentation");
    const int r = p.rank();
    const int nrel = static_cast<int>(p.relators.size());

    Eigen::MatrixXd d1 = Eigen::MatrixXd::Zero(3 * nrel, 3 * r);
    for (int i = 0; i < nrel; ++i)
        for (int j = 0; j < r; ++j)
            d1.block<3, 3>(3 * i, 3 * j) =
                evaluate_adjoint(fox_derivative(p.relators[static_cast<size_t>(i)], j), rho);

    Eigen::MatrixXd d2(3 * r, 3);
    for (int j = 0; j < r; ++j)
        d2.block<3, 3>(3 * j, 0) = Eigen::Matrix3d::Identity() - adjoint_matrix(rho.image(j));

    const double chain_norm = (d1 * d2).norm();
    if (chain_norm > std::max(kChainTol, 100.0 * rho.residual()))
        throw DegenerateComplex("chain condition d1*d2 = 0 fails: " + std::to_string(chain_norm));

    TwistedComplex t{BasedChainComplex{{3 * nrel, 3 * r, 3}, {d1, d2}, {{}, {}, {}}}, p, rho};
    return t;
}

namespace {

// Orthonormal basis of im M against the absolute scale max(1, sigma_max):
// used on projections of orthonormal frames, where a genuine direction has
// length O(1) and anything smaller is cancellation noise.
Eigen::MatrixXd significant_image(const Eigen::MatrixXd& m, double tol) {
    if (m.rows() == 0 || m.cols() == 0) return Eigen::MatrixXd::Zero(m.rows(), 0);
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU);
    const auto& sv = svd.singularValues();
    const double cut = tol * std::max(1.0, sv.size() > 0 ? sv(0) : 0.0);
    int rank = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cut) ++rank;
    return svd.matrixU().leftCols(rank);
}

}  // namespace

CohomologySummary twisted_cohomology(const TwistedComplex& t, double rank_tol) {
    const auto& d1 = t.complex.boundaries[0];
    const auto& d2 = t.complex.boundaries[1];
    CohomologySummary s;

    const RankFactors f2 = rank_kernel_image(d2, rank_tol);   // ker/im of d_2
    const RankFactors f1 = rank_kernel_image(d1, rank_tol);

    // H^0 = H_2 = ker d_2
    s.h0_reps = f2.kernel;
    s.b0 = static_cast<int>(s.h0_reps.cols());

    // H^1 = H_1 = ker d_1 / im d_2: project the kernel off the (orthonormal)
    // image and keep the significant directions.
    const Eigen::MatrixXd proj = f1.kernel - f2.image * (f2.image.transpose() * f1.kernel);
    s.h1_reps = significant_image(proj, rank_tol);
    s.b1 = static_cast<int>(s.h1_reps.cols());

    // H^2 = H_0 = coker d_1: orthogonal complement of im d_1.
    const Eigen::Index n0 = t.complex.dims[0];
    const Eigen::MatrixXd q =
        Eigen::MatrixXd::Identity(n0, n0) - f1.image * f1.image.transpose();
    s.h2_reps = significant_image(q, rank_tol);
    s.b2 = static_cast<int>(s.h2_reps.cols());
    return s;
}

bool is_irreducible(const Representation& rho) {
    const int r = rho.rank();
    const UnitQuaternion one;
    for (int i = 0; i < r; ++i)
        for (int j = i + 1; j < r; ++j) {
            const UnitQuaternion a = rho.image(i), b = rho.image(j);
            const UnitQuaternion comm = a * b * a.inverse() * b.inverse();
            if (comm.dist(one) >= kRepTol) return true;
        }
    return false;
}

bool is_regular(const TwistedComplex& t, double rank_tol) {
    return is_irreducible(t.rep) && twisted_cohomology(t, rank_tol).b1 == 1;
}

Eigen::Vector3d evaluate_cocycle(const std::vector<UnitQuaternion>& images,
                                 const Eigen::VectorXd& v, const Word& w) {
    Eigen::Vector3d val = Eigen::Vector3d::Zero();
    UnitQuaternion acc;  // rho of the processed prefix
    for (const Letter& l : w.letters()) {
        const auto g = static_cast<Eigen::Index>(l.gen);
        const Eigen::Vector3d vg = v.segment<3>(3 * g);
        const long long steps = std::abs(l.exp);
        for (long long k = 0; k < steps; ++k) {
            if (l.exp > 0) {
                val += adjoint_matrix(acc) * vg;
                acc = acc * images[static_cast<size_t>(l.gen)];
            } else {
                // d(g^-1) = -Ad_{rho(g)^-1} d(g)
                acc = acc * images[static_cast<size_t>(l.gen)].inverse();
                val -= adjoint_matrix(acc) * vg;
            }
        }
    }
    return val;
}

double f_mu(const TwistedComplex& t, const Eigen::VectorXd& v, const Word& mu) {
    AxisAngle aa;
    try {
        aa = axis_angle(evaluate_word(mu, t.rep));
    } catch (const CentralElement&) {
        throw CentralMeridian("rho(mu) is central; the axis pairing is undefined");
    }
    return evaluate_cocycle(t.rep.images(), v, mu).dot(aa.axis.coords());
}

namespace {

Eigen::VectorXd h1_representative(const TwistedComplex& t, double rank_tol) {
    const CohomologySummary s = twisted_cohomology(t, rank_tol);
    if (s.b1 != 1) throw NotRegular("dim H^1 = " + std::to_string(s.b1) + ", need 1");
    return s.h1_reps.col(0);
}

}  // namespace

bool is_mu_regular(const TwistedComplex& t, const Word& mu, double rank_tol) {
    if (!is_regular(t, rank_tol)) throw NotRegular("representation is not regular");
    const Eigen::VectorXd v = h1_representative(t, rank_tol);
    try {
        return std::abs(f_mu(t, v, mu)) > rank_tol * v.norm();
    } catch (const CentralMeridian&) {
        return false;
    }
}

Eigen::VectorXd reference_h1(const TwistedComplex& t, const Word& mu, double rank_tol) {
    if (!is_regular(t, rank_tol)) throw NotRegular("representation is not regular");
    const Eigen::VectorXd v = h1_representative(t, rank_tol);
    const double f = f_mu(t, v, mu);
    if (std::abs(f) <= rank_tol * v.norm())
        throw NotMuRegular("f_mu vanishes on H^1; representation is not mu-regular");
    return v / f;
}

Eigen::Vector3d i_star(const TwistedComplex& t, const Eigen::VectorXd& z) {
    if (t.presentation.peripheral_identity.empty())
        throw MissingPeripheralData("peripheral identity sequence required for i*");
    Eigen::Vector3d out = Eigen::Vector3d::Zero();
    for (const PeripheralTerm& term : t.presentation.peripheral_identity) {
        const Eigen::Vector3d block = z.segment<3>(3 * static_cast<Eigen::Index>(term.relator));
        out += term.sign * (adjoint_matrix(evaluate_word(term.conjugator, t.rep)) * block);
    }
    return out;
}

Eigen::VectorXd reference_h2(const TwistedComplex& t, double rank_tol) {
    if (!t.presentation.has_peripheral())
        throw MissingPeripheralData("meridian, longitude and peripheral identity required");
    if (!is_regular(t, rank_tol)) throw NotRegular("representation is not regular");
    const CohomologySummary s = twisted_cohomology(t, rank_tol);
    if (s.b2 != 1) throw NotRegular("dim H^2 = " + std::to_string(s.b2) + ", need 1");
    const Eigen::VectorXd w = s.h2_reps.col(0);

    AxisAngle aa;
    try {
        aa = axis_angle(evaluate_word(*t.presentation.meridian, t.rep));
    } catch (const CentralElement&) {
        throw CentralMeridian("rho(meridian) is central");
    }
    const double pairing = i_star(t, w).dot(aa.axis.coords());
    if (std::abs(pairing) <= rank_tol * w.norm())
        throw DegeneratePairing("<i*(w), P^rho> vanishes on the H^2 representative");
    return w / pairing;
}

BasedChainComplex untwisted_complex(const GroupPresentation& p) {
    const std::vector<long long> exps = abelianization_exponents(p);
    const int r = p.rank();
    const int nrel = static_cast<int>(p.relators.size());

    Eigen::MatrixXd d1(nrel, r);
    for (int i = 0; i < nrel; ++i)
        for (int j = 0; j < r; ++j)
            d1(i, j) = static_cast<double>(
                fox_derivative(p.relators[static_cast<size_t>(i)], j).augmentation());
    const Eigen::MatrixXd d2 = Eigen::MatrixXd::Zero(r, 1);

    Eigen::VectorXd mstar(r);
    for (int j = 0; j < r; ++j) mstar(j) = static_cast<double>(exps[static_cast<size_t>(j)]);
    Eigen::VectorXd pt(1);
    pt << 1.0;

    BasedChainComplex c;
    c.dims = {nrel, r, 1};
    c.boundaries = {d1, d2};
    c.homology_bases = {{}, {mstar}, {pt}};
    return c;
}

int tau0(const GroupPresentation& p) {
    const TorsionResult res = sign_determined_torsion(untwisted_complex(p));
    return res.value > 0 ? +1 : -1;
}

double nonabelian_torsion(const GroupPresentation& p, const Representation& rho, double rank_tol) {
    if (!p.has_peripheral())
        throw MissingPeripheralData("nonabelian torsion needs meridian, longitude and peripheral identity");
    TwistedComplex t = twisted_complex(p, rho);
    const Eigen::VectorXd h1 = reference_h1(t, *p.meridian, rank_tol);
    const Eigen::VectorXd h2 = reference_h2(t, rank_tol);
    t.complex.homology_bases = {{h2}, {h1}, {}};
    const TorsionResult res = sign_determined_torsion(t.complex, rank_tol);
    return tau0(p) * res.value;
}

Representation abelian_rep(const GroupPresentation& p, double theta) {
    if (theta < 0.0 || theta > std::numbers::pi)
        throw InvalidParameter("theta must lie in [0, pi]");
    const std::vector<long long> exps = abelianization_exponents(p);
    std::vector<UnitQuaternion> images;
    images.reserve(exps.size());
    for (long long n : exps) {
        const double a = static_cast<double>(n) * theta;
        images.push_back(UnitQuaternion::from_axis_angle(a, {1, 0, 0}));
    }
    return Representation(p, std::move(images));
}

double abelian_torsion(const GroupPresentation& p, double theta, double rank_tol) {
    if (theta <= 0.0 || theta >= std::numbers::pi)
        throw InvalidParameter("theta must lie in the open interval (0, pi)");
    const LaurentPolynomial delta = alexander_polynomial(p);
    const std::complex<double> z = std::exp(std::complex<double>(0.0, 2.0 * theta));
    if (std::abs(delta.eval(z)) < std::max(rank_tol, 1e-9))
        throw NonRegularTheta("e^{2i theta} is a root of the Alexander polynomial");

    const std::vector<long long> exps = abelianization_exponents(p);
    const Representation rho = abelian_rep(p, theta);
    TwistedComplex t = twisted_complex(p, rho);
    const int r = p.rank();

    Eigen::VectorXd h0 = Eigen::VectorXd::Zero(3);
    h0(0) = 1.0;  // i
    Eigen::VectorXd h1 = Eigen::VectorXd::Zero(3 * r);
    for (int j = 0; j < r; ++j) h1(3 * j) = static_cast<double>(exps[static_cast<size_t>(j)]);

    // The generalized h(1) must be a cocycle (design decision: verified here).
    if ((t.complex.boundaries[0] * h1).norm() > 1e-8 * std::max(1.0, h1.norm()))
        throw InvalidBasis("generalized abelian h(1) is not a cocycle");

    t.complex.homology_bases = {{}, {h1}, {h0}};
    const TorsionResult res = sign_determined_torsion(t.complex, rank_tol);
    return tau0(p) * res.value;
}

Representation torus_rep(int q, int l, double t) {
    if (q < 3 || q % 2 == 0) throw InvalidParameter("q must be odd and >= 3");
    if (l < 1 || l > (q - 1) / 2) throw InvalidParameter("l must satisfy 1 <= l <= (q-1)/2");
    if (!(t > 0.0 && t < 1.0)) throw InvalidParameter("t must lie in (0, 1)");
    const GroupPresentation p = torus_knot_presentation(q);
    const double a = (2.0 * l - 1.0) * std::numbers::pi / q;
    std::vector<UnitQuaternion> images(2);
    images[0] = UnitQuaternion::from_axis_angle(std::numbers::pi / 2.0, {1, 0, 0});  // i
    images[1] = UnitQuaternion::from_axis_angle(
        a, {std::cos(std::numbers::pi * t), std::sin(std::numbers::pi * t), 0});
    return Representation(p, std::move(images));
}

double theta_mu(const Representation& rho, const Word& mu) {
    try {
        return axis_angle(evaluate_word(mu, rho)).theta;
    } catch (const CentralElement&) {
        throw CentralMeridian("rho(mu) is central; theta_mu undefined");
    }
}

std::vector<ScanRow> scan_torus(int q, int l, const std::vector<double>& t_grid, double h,
                                double rank_tol) {
    if (h <= 0.0) throw InvalidParameter("finite-difference step must be positive");
    const GroupPresentation p = torus_knot_presentation(q);
    if (l < 1 || l > (q - 1) / 2) throw InvalidParameter("l must satisfy 1 <= l <= (q-1)/2");
    const Word m = *p.meridian;
    const double closed_const =
        -(8.0 / q) * std::pow(std::sin((2.0 * l - 1.0) * std::numbers::pi / q), 2);

    std::vector<ScanRow> rows;
    rows.reserve(t_grid.size());
    for (double t : t_grid) {
        if (!(t > 0.0 && t < 1.0) || !(t - h > 0.0) || !(t + h < 1.0))
            throw InvalidParameter("grid point " + std::to_string(t) +
                                   " (with step h) must lie inside (0, 1)");
        ScanRow row;
        row.t = t;
        row.theta_m = theta_mu(torus_rep(q, l, t), m);
        row.tor = nonabelian_torsion(p, torus_rep(q, l, t), rank_tol);
        const double up = theta_mu(torus_rep(q, l, t + h), m);
        const double dn = theta_mu(torus_rep(q, l, t - h), m);
        row.dtheta_dt = (up - dn) / (2.0 * h);
        row.tau_form = row.tor * row.dtheta_dt;
        row.closed_form = closed_const * row.dtheta_dt;
        row.abs_err = std::abs(row.tau_form - row.closed_form);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace torsionlab
