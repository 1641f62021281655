#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "torsionlab/chain.hpp"
#include "torsionlab/checks.hpp"

using namespace torsionlab;

namespace {

Eigen::VectorXd vec(std::initializer_list<double> xs) {
    Eigen::VectorXd v(static_cast<long>(xs.size()));
    long i = 0;
    for (double x : xs) v[i++] = x;
    return v;
}

// 0 -> R --d--> R -> 0 with d = [scale], no homology.
BasedChainComplex scaled_interval(double scale) {
    BasedChainComplex c;
    c.dims = {1, 1};
    c.boundaries = {Eigen::MatrixXd::Constant(1, 1, scale)};
    c.homology_bases.resize(2);
    return c;
}

}  // namespace

TEST_CASE("rank kernel image") {
    const RankFactors zero = rank_kernel_image(Eigen::MatrixXd::Zero(3, 4), 1e-9);
    CHECK(zero.rank == 0);
    CHECK(zero.kernel.cols() == 4);
    CHECK(zero.image.cols() == 0);

    const RankFactors id = rank_kernel_image(Eigen::MatrixXd::Identity(3, 3), 1e-9);
    CHECK(id.rank == 3);
    CHECK(id.kernel.cols() == 0);
    CHECK(id.image.cols() == 3);

    Eigen::MatrixXd near = Eigen::Vector2d(1.0, 1e-14).asDiagonal();
    CHECK(rank_kernel_image(near, 1e-9).rank == 1);
    CHECK(rank_kernel_image(near, 1e-16).rank == 2);

    // orthonormality and span
    std::mt19937_64 rng(5);
    std::normal_distribution<double> g;
    for (int trial = 0; trial < 20; ++trial) {
        Eigen::MatrixXd a(4, 6);
        for (long i = 0; i < a.size(); ++i) a(i / 6, i % 6) = g(rng);
        a.row(3) = a.row(0) + a.row(1);  // force rank <= 3
        const RankFactors f = rank_kernel_image(a, 1e-9);
        CHECK(f.rank == 3);
        CHECK(f.kernel.cols() == 3);
        CHECK((f.kernel.transpose() * f.kernel -
               Eigen::MatrixXd::Identity(f.kernel.cols(), f.kernel.cols()))
                  .norm() < 1e-12);
        CHECK((f.image.transpose() * f.image -
               Eigen::MatrixXd::Identity(f.rank, f.rank))
                  .norm() < 1e-12);
        CHECK((a * f.kernel).norm() < 1e-9);
        // image columns really span a's columns
        const Eigen::MatrixXd proj = f.image * f.image.transpose();
        CHECK((proj * a - a).norm() < 1e-9);
    }
}

TEST_CASE("validate complex") {
    BasedChainComplex ok = scaled_interval(2.0);
    CHECK_NOTHROW(validate_complex(ok));

    // wrong boundary shape
    BasedChainComplex bad_shape = ok;
    bad_shape.boundaries[0] = Eigen::MatrixXd::Zero(2, 1);
    CHECK_THROWS_AS(validate_complex(bad_shape), InvalidParameter);

    // d*d != 0
    BasedChainComplex chain;
    chain.dims = {1, 1, 1};
    chain.boundaries = {Eigen::MatrixXd::Constant(1, 1, 1.0),
                        Eigen::MatrixXd::Constant(1, 1, 1.0)};
    chain.homology_bases.resize(3);
    CHECK_THROWS_AS(validate_complex(chain), DegenerateComplex);

    // homology vector that is not a cycle
    BasedChainComplex notcycle = scaled_interval(1.0);
    notcycle.homology_bases[1] = {vec({1.0})};
    CHECK_THROWS_AS(validate_complex(notcycle), InvalidBasis);

    // homology class dependent on the image
    BasedChainComplex incoherent;
    incoherent.dims = {2, 1};
    incoherent.boundaries = {(Eigen::MatrixXd(2, 1) << 1, 0).finished()};
    incoherent.homology_bases.resize(2);
    incoherent.homology_bases[0] = {vec({1.0, 0.0})};  // lies in im d1
    CHECK_THROWS_AS(validate_complex(incoherent), InvalidBasis);

    // correct class for the same complex passes
    incoherent.homology_bases[0] = {vec({0.0, 1.0})};
    CHECK_NOTHROW(validate_complex(incoherent));

    // missing homology classes surface when the assembled basis cannot fill C_i
    BasedChainComplex missing;
    missing.dims = {1};
    missing.boundaries = {};
    missing.homology_bases.resize(1);
    CHECK_THROWS_AS(torsion(missing), DegenerateComplex);
}

TEST_CASE("torsion unit examples") {
    CHECK(torsion(scaled_interval(1.0)) == doctest::Approx(1.0));
    CHECK(torsion(scaled_interval(2.0)) == doctest::Approx(0.5));
    CHECK(torsion(scaled_interval(-2.0)) == doctest::Approx(-0.5));

    // 0 -> R -> 0 with homology basis (3): tor = 1/3
    BasedChainComplex point;
    point.dims = {1};
    point.homology_bases = {{vec({3.0})}};
    CHECK(torsion(point) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    // same complex in degree 1: 0 -> R -> 0 -> ... shifts the exponent
    BasedChainComplex shifted;
    shifted.dims = {1, 1};
    shifted.boundaries = {Eigen::MatrixXd::Zero(1, 1)};
    shifted.homology_bases = {{vec({1.0})}, {vec({3.0})}};
    CHECK(torsion(shifted) == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("sign determined torsion") {
    // acyclic: sign exponent 0, value = tor
    const BasedChainComplex c = scaled_interval(2.0);
    const TorsionResult r = sign_determined_torsion(c);
    CHECK(r.sign_exponent == 0);
    CHECK(r.value == doctest::Approx(0.5));
    CHECK(r.tor == doctest::Approx(0.5));
    CHECK(r.alpha == std::vector<long long>{1, 2});
    CHECK(r.beta == std::vector<long long>{0, 0});

    // all-zero boundaries, one homology class per degree
    BasedChainComplex h;
    h.dims = {1, 1, 1};
    h.boundaries = {Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Zero(1, 1)};
    h.homology_bases = {{vec({1.0})}, {vec({2.0})}, {vec({1.0})}};
    const TorsionResult rh = sign_determined_torsion(h);
    CHECK(rh.tor == doctest::Approx(2.0));
    CHECK(rh.alpha == std::vector<long long>{1, 2, 3});
    CHECK(rh.beta == std::vector<long long>{1, 2, 3});
    // |C| = 1*1 + 2*2 + 3*3 = 14, even
    CHECK(rh.sign_exponent == 0);
    CHECK(rh.value == doctest::Approx(2.0));
}

TEST_CASE("homology basis change") {
    BasedChainComplex h;
    h.dims = {1, 1, 1};
    h.boundaries = {Eigen::MatrixXd::Zero(1, 1), Eigen::MatrixXd::Zero(1, 1)};
    h.homology_bases = {{vec({1.0})}, {vec({2.0})}, {vec({1.0})}};
    const double base = torsion(h);

    // scaling the degree-1 class by lambda multiplies the torsion by lambda
    for (double lambda : {3.0, -0.5, 7.25}) {
        auto nb = h.homology_bases;
        nb[1][0] *= lambda;
        const BasedChainComplex scaled = change_homology_basis(h, nb);
        CHECK(torsion(scaled) == doctest::Approx(base * lambda).epsilon(1e-12));
    }
    // scaling the degree-2 class by lambda divides it
    for (double lambda : {3.0, -0.5}) {
        auto nb = h.homology_bases;
        nb[2][0] *= lambda;
        CHECK(torsion(change_homology_basis(h, nb)) ==
              doctest::Approx(base / lambda).epsilon(1e-12));
    }
    // identity change is a no-op
    CHECK(torsion(change_homology_basis(h, h.homology_bases)) == doctest::Approx(base));

    // swapping in a non-cycle is rejected
    BasedChainComplex iv = scaled_interval(1.0);
    CHECK_THROWS_AS(change_homology_basis(iv, {{vec({1.0})}, {}}), InvalidBasis);

    // wrong class count is rejected
    CHECK_THROWS_AS(change_homology_basis(h, {{}, {vec({2.0})}, {vec({1.0})}}), InvalidBasis);
}

TEST_CASE("random complex generator") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 25; ++trial) {
        const BasedChainComplex c = random_based_complex(rng, 3, 3, trial % 2 == 0);
        CHECK_NOTHROW(validate_complex(c));
        if (trial % 2 == 0) {
            for (const auto& hb : c.homology_bases) CHECK(hb.empty());
        }
        const double t = torsion(c);
        CHECK(std::isfinite(t));
        CHECK(t != 0.0);
    }
}

TEST_CASE("torsion independence of internal choices") {
    const CheckReport r = check_lift_independence(200, 12345);
    CHECK(r.pass);
    CHECK(r.max_err < r.tolerance);
    CHECK(r.trials == 200);
}

TEST_CASE("left shift inverts torsion") {
    const CheckReport r = check_shift(200, 777);
    CHECK(r.pass);
}

TEST_CASE("basis change determinant rule") {
    const CheckReport r = check_basis_change(200, 4242);
    CHECK(r.pass);
}

TEST_CASE("multiplicativity lemma") {
    const CheckReport r = check_multiplicativity(150, 2026);
    CHECK(r.pass);
    CHECK(r.max_err < 1e-8);
}
