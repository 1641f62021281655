#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "torsionlab/checks.hpp"
#include "torsionlab/json_io.hpp"

using namespace torsionlab;

TEST_CASE("report formatting") {
    CheckReport r;
    r.name = "demo";
    r.trials = 10;
    r.seed = 42;
    r.max_err = 1e-12;
    r.tolerance = 1e-9;
    r.pass = true;
    const std::string line = format_report(r);
    CHECK(line.find("demo") != std::string::npos);
    CHECK(line.find("seed=42") != std::string::npos);
    CHECK(line.find("PASS") != std::string::npos);
    r.pass = false;
    CHECK(format_report(r).find("FAIL") != std::string::npos);
}

TEST_CASE("property suites") {
    CHECK(check_lift_independence(150, 1).pass);
    CHECK(check_shift(150, 2).pass);
    CHECK(check_basis_change(150, 3).pass);
    CHECK(check_multiplicativity(100, 4).pass);
    CHECK(check_fox_identity(150, 5).pass);
    CHECK(check_conjugation(20, 6).pass);
    CHECK(check_torus_oracle().pass);
    CHECK(check_alexander_oracle().pass);
}

TEST_CASE("determinism") {
    const CheckReport a = check_multiplicativity(50, 99);
    const CheckReport b = check_multiplicativity(50, 99);
    CHECK(a.max_err == b.max_err);
    CHECK(a.pass == b.pass);
    const CheckReport c = check_lift_independence(50, 7);
    const CheckReport d = check_lift_independence(50, 7);
    CHECK(c.max_err == d.max_err);
}

TEST_CASE("run_checks dispatch") {
    const auto all = all_check_names();
    CHECK(all.size() == 8);
    const auto reports = run_checks({"fox-identity", "shift"}, 100, 11);
    REQUIRE(reports.size() == 2);
    CHECK(reports[0].name == "fox-identity");
    CHECK(reports[1].name == "shift");
    CHECK(reports[0].pass);
    CHECK(reports[1].pass);
    CHECK_THROWS_AS(run_checks({"no-such-suite"}, 10, 1), InvalidParameter);
}

TEST_CASE("complex json round trip") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const BasedChainComplex c = random_based_complex(rng, 3, 3, trial % 2 == 0);
        const nlohmann::json j = complex_to_json(c);
        const BasedChainComplex back = complex_from_json(j);
        REQUIRE(back.dims == c.dims);
        for (size_t i = 0; i < c.boundaries.size(); ++i)
            CHECK((back.boundaries[i] - c.boundaries[i]).norm() < 1e-12);
        REQUIRE(back.homology_bases.size() == c.homology_bases.size());
        for (size_t i = 0; i < c.homology_bases.size(); ++i) {
            REQUIRE(back.homology_bases[i].size() == c.homology_bases[i].size());
            for (size_t k = 0; k < c.homology_bases[i].size(); ++k)
                CHECK((back.homology_bases[i][k] - c.homology_bases[i][k]).norm() < 1e-12);
        }
        CHECK(torsion(back) == doctest::Approx(torsion(c)).epsilon(1e-9));
    }

    // flat row-major boundaries are accepted too
    nlohmann::json j;
    j["dims"] = {1, 1};
    j["boundaries"] = {{2.0}};
    j["homology_bases"] = {nlohmann::json::array(), nlohmann::json::array()};
    const BasedChainComplex c = complex_from_json(j);
    CHECK(c.boundaries[0](0, 0) == 2.0);
    CHECK(torsion(c) == doctest::Approx(0.5));

    nlohmann::json bad = j;
    bad["boundaries"] = {{2.0, 1.0, 3.0}};  // wrong element count
    CHECK_THROWS_AS(complex_from_json(bad), InvalidParameter);
}

TEST_CASE("presentation json round trip") {
    for (const GroupPresentation& p :
         {trefoil_wirtinger(), figure8_wirtinger(), torus_knot_presentation(5),
          unknot_presentation()}) {
        const nlohmann::json j = presentation_to_json(p);
        const GroupPresentation back = presentation_from_json(j);
        CHECK(back.generator_names == p.generator_names);
        CHECK(back.relators == p.relators);
        CHECK(back.meridian == p.meridian);
        CHECK(back.longitude == p.longitude);
        REQUIRE(back.peripheral_identity.size() == p.peripheral_identity.size());
        for (size_t i = 0; i < p.peripheral_identity.size(); ++i) {
            CHECK(back.peripheral_identity[i].sign == p.peripheral_identity[i].sign);
            CHECK(back.peripheral_identity[i].relator == p.peripheral_identity[i].relator);
            CHECK(back.peripheral_identity[i].conjugator == p.peripheral_identity[i].conjugator);
        }
    }

    nlohmann::json j;
    j["generators"] = {"x", "y"};
    j["relators"] = {"x^2*y^-3"};
    j["meridian"] = "x*y^-1";
    const GroupPresentation p = presentation_from_json(j);
    CHECK(p.rank() == 2);
    CHECK(p.relators[0] == parse_word("x^2*y^-3", p.generator_names));

    nlohmann::json bad = j;
    bad["relators"] = nlohmann::json::array();
    CHECK_THROWS_AS(presentation_from_json(bad), DeficiencyMismatch);
}
