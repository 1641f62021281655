#include "torsionlab/chain.hpp"

#include <cmath>
#include <string>

namespace torsionlab {

RankFactors rank_kernel_image(const Eigen::MatrixXd& m, double tol) {
    if (tol <= 0) throw InvalidParameter("rank tolerance must be positive");
    RankFactors out;
    const Eigen::Index rows = m.rows(), cols = m.cols();
    if (rows == 0 || cols == 0) {
        out.rank = 0;
        out.kernel = Eigen::MatrixXd::Identity(cols, cols);
        out.image = Eigen::MatrixXd::Zero(rows, 0);
        return out;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const auto& sv = svd.singularValues();
    const double smax = sv.size() > 0 ? sv(0) : 0.0;
    int rank = 0;
    if (smax > 0) {
        for (Eigen::Index i = 0; i < sv.size(); ++i)
            if (sv(i) > tol * smax) ++rank;
    }
    out.rank = rank;
    out.kernel = svd.matrixV().rightCols(cols - rank);
    out.image = svd.matrixU().leftCols(rank);
    return out;
}

namespace {

void check_shapes(const BasedChainComplex& c) {
    const int N = c.top_degree();
    if (N < 0) throw InvalidParameter("complex must have at least one degree");
    if (static_cast<int>(c.boundaries.size()) != N)
        throw InvalidParameter("complex needs exactly dims.size()-1 boundary matrices");
    if (static_cast<int>(c.homology_bases.size()) != N + 1)
        throw InvalidParameter("complex needs one homology basis list per degree");
    for (int i = 0; i < N; ++i) {
        if (c.boundaries[i].rows() != c.dims[i] || c.boundaries[i].cols() != c.dims[i + 1])
            throw InvalidParameter("boundary " + std::to_string(i + 1) + " has wrong shape");
    }
    for (int i = 0; i <= N; ++i)
        for (const auto& v : c.homology_bases[i])
            if (v.size() != c.dims[i])
                throw InvalidParameter("homology vector in degree " + std::to_string(i) +
                                       " has wrong dimension");
}

// Least-squares lift L with d * L = targets (targets inside im d numerically).
Eigen::MatrixXd lift_through(const Eigen::MatrixXd& d, const Eigen::MatrixXd& targets) {
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(d, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return svd.solve(targets);
}

}  // namespace

void validate_complex(const BasedChainComplex& c, double rank_tol, double chain_tol) {
    check_shapes(c);
    const int N = c.top_degree();
    for (int i = 0; i + 1 < N; ++i) {
        const double scale = std::max(1.0, c.boundaries[i].norm() * c.boundaries[i + 1].norm());
        if ((c.boundaries[i] * c.boundaries[i + 1]).norm() > chain_tol * scale)
            throw DegenerateComplex("d" + std::to_string(i + 1) + " * d" + std::to_string(i + 2) +
                                    " != 0");
    }
    for (int i = 0; i <= N; ++i) {
        const auto& basis = c.homology_bases[i];
        if (basis.empty()) continue;
        // cycles
        if (i > 0) {
            const Eigen::MatrixXd& d = c.boundaries[i - 1];
            for (const auto& v : basis) {
                const double scale = std::max(1.0, d.norm() * v.norm());
                if ((d * v).norm() > 1e-8 * scale)
                    throw InvalidBasis("homology vector in degree " + std::to_string(i) +
                                       " is not a cycle");
            }
        }
        // classes independent modulo boundaries
        const Eigen::MatrixXd b =
            i < N ? rank_kernel_image(c.boundaries[i], rank_tol).image
                  : Eigen::MatrixXd::Zero(c.dims[i], 0);
        Eigen::MatrixXd joint(c.dims[i], b.cols() + static_cast<Eigen::Index>(basis.size()));
        joint.leftCols(b.cols()) = b;
        for (size_t k = 0; k < basis.size(); ++k)
            joint.col(b.cols() + static_cast<Eigen::Index>(k)) = basis[k];
        if (rank_kernel_image(joint, rank_tol).rank !=
            static_cast<int>(b.cols() + static_cast<Eigen::Index>(basis.size())))
            throw InvalidBasis("homology classes in degree " + std::to_string(i) +
                               " are dependent modulo boundaries");
    }
}

double torsion(const BasedChainComplex& c, double rank_tol) {
    check_shapes(c);
    const int N = c.top_degree();

    // b^i = orthonormal basis of B_i = im d_{i+1}
    std::vector<Eigen::MatrixXd> b(static_cast<size_t>(N) + 1);
    for (int i = 0; i <= N; ++i)
        b[static_cast<size_t>(i)] = i < N ? rank_kernel_image(c.boundaries[i], rank_tol).image
                                          : Eigen::MatrixXd::Zero(c.dims[i], 0);

    double value = 1.0;
    for (int i = 0; i <= N; ++i) {
        const Eigen::Index n = c.dims[i];
        const Eigen::Index nb = b[static_cast<size_t>(i)].cols();
        const Eigen::Index nh = static_cast<Eigen::Index>(c.homology_bases[i].size());
        const Eigen::Index nl = i > 0 ? b[static_cast<size_t>(i) - 1].cols() : 0;
        if (nb + nh + nl != n)
            throw DegenerateComplex("degree " + std::to_string(i) + ": boundary ranks " +
                                    std::to_string(nb) + "+" + std::to_string(nl) +
                                    " and homology dimension " + std::to_string(nh) +
                                    " do not fill dimension " + std::to_string(n));
        if (n == 0) continue;

        Eigen::MatrixXd M(n, n);
        M.leftCols(nb) = b[static_cast<size_t>(i)];
        for (Eigen::Index k = 0; k < nh; ++k)
            M.col(nb + k) = c.homology_bases[i][static_cast<size_t>(k)];
        if (nl > 0)
            M.rightCols(nl) = lift_through(c.boundaries[i - 1], b[static_cast<size_t>(i) - 1]);

        const double det = M.partialPivLu().determinant();
        double scale = 1.0;
        for (Eigen::Index k = 0; k < n; ++k) scale *= M.col(k).norm();
        if (std::abs(det) < 1e-12 * std::max(scale, 1e-300))
            throw DegenerateComplex("singular assembled basis in degree " + std::to_string(i));
        value *= (i % 2 == 0) ? 1.0 / det : det;  // exponent (-1)^{i+1}
    }
    return value;
}

TorsionResult sign_determined_torsion(const BasedChainComplex& c, double rank_tol) {
    TorsionResult res;
    res.tor = torsion(c, rank_tol);
    const int N = c.top_degree();
    long long alpha = 0, beta = 0, mod = 0;
    for (int i = 0; i <= N; ++i) {
        alpha += c.dims[i];
        beta += static_cast<long long>(c.homology_bases[i].size());
        res.alpha.push_back(alpha);
        res.beta.push_back(beta);
        mod += alpha * beta;
    }
    res.sign_exponent = static_cast<int>(mod % 2);
    res.value = res.sign_exponent ? -res.tor : res.tor;
    return res;
}

BasedChainComplex change_homology_basis(const BasedChainComplex& c,
                                        std::vector<std::vector<Eigen::VectorXd>> new_bases,
                                        double rank_tol) {
    check_shapes(c);
    if (new_bases.size() != c.homology_bases.size())
        throw InvalidBasis("need one homology basis list per degree");
    for (size_t i = 0; i < new_bases.size(); ++i)
        if (new_bases[i].size() != c.homology_bases[i].size())
            throw InvalidBasis("homology rank changed in degree " + std::to_string(i));
    BasedChainComplex out = c;
    out.homology_bases = std::move(new_bases);
    validate_complex(out, rank_tol);
    return out;
}

}  // namespace torsionlab
