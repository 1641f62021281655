#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "torsionlab/presentation.hpp"

using namespace torsionlab;

namespace {

GroupPresentation trefoil() {
    return parse_presentation("gens: a, b\nrel: a*b*a*B*A*B\nmeridian: a\n");
}

GroupPresentation figure8() {
    return parse_presentation("gens: a, b\nrel: a*B*A*b*a*B*a*b*A*B\nmeridian: a\n");
}

// Irreducible images for the q=3 torus presentation with parameter t.
std::vector<UnitQuaternion> torus3_images(double t) {
    const double a = std::numbers::pi / 3;
    const UnitQuaternion x(0, 1, 0, 0);
    const UnitQuaternion y(std::cos(a), std::sin(a) * std::cos(std::numbers::pi * t),
                           std::sin(a) * std::sin(std::numbers::pi * t), 0);
    return {x, y};
}

}  // namespace

TEST_CASE("word arithmetic") {
    const Word x = Word::generator(0), y = Word::generator(1);
    CHECK(Word().empty());
    CHECK(Word().length() == 0);
    CHECK((x * x.inverse()).empty());                       // free reduction
    CHECK(x * y * y == Word({{0, 1}, {1, 2}}));
    CHECK((x.pow(2) * y.pow(-3)).length() == 5);
    CHECK((x * y).inverse() == y.inverse() * x.inverse());
    CHECK((x * y).pow(0).empty());
    CHECK((x * y).pow(-2) == (x * y).inverse() * (x * y).inverse());
    CHECK((x.pow(2) * y.pow(-3)).exponent_sum(0) == 2);
    CHECK((x.pow(2) * y.pow(-3)).exponent_sum(1) == -3);
    CHECK(Word().max_generator() == -1);
    CHECK((x * y).max_generator() == 1);
    // mid-word cancellation across products
    CHECK((x * y) * (y.inverse() * x) == x.pow(2));
}

TEST_CASE("word parsing") {
    const std::vector<std::string> names = {"x", "y"};
    CHECK(parse_word("x^2*y^-3", names) == Word({{0, 2}, {1, -3}}));
    CHECK(parse_word("x*Y", names) == Word({{0, 1}, {1, -1}}));       // uppercase inverse
    CHECK(parse_word("(x*y^-1)^-2", names) == parse_word("y*x^-1*y*x^-1", names));
    CHECK(parse_word("1", names).empty());
    CHECK(parse_word("x * 1 * y", names) == parse_word("x*y", names));
    CHECK_THROWS_AS(parse_word("z", names), UnknownGenerator);
    CHECK_THROWS_AS(parse_word("x^", names), SyntaxError);
    CHECK_THROWS_AS(parse_word("x**y", names), SyntaxError);
    CHECK_THROWS_AS(parse_word("(x*y", names), SyntaxError);
    CHECK_THROWS_AS(parse_word("", names), SyntaxError);
    // all-uppercase is the inverse shorthand even for multi-character names;
    // mixed case falls back to a case-insensitive positive match
    const std::vector<std::string> longnames = {"g1", "ab"};
    CHECK(parse_word("g1*ab^-1", longnames) == Word({{0, 1}, {1, -1}}));
    CHECK(parse_word("G1", longnames) == Word::generator(0).inverse());
    CHECK(parse_word("AB", longnames) == Word::generator(1).inverse());
    CHECK(parse_word("Ab", longnames) == Word::generator(1));

    CHECK(word_to_string(parse_word("x^2*y^-3", names), names) == "x^2*y^-3");
    CHECK(word_to_string(Word(), names) == "1");
}

TEST_CASE("presentation DSL") {
    const GroupPresentation p = parse_presentation("gens: x, y\nrel: x^2*y^-3\n");
    CHECK(p.rank() == 2);
    REQUIRE(p.relators.size() == 1);
    CHECK(p.relators[0] == Word({{0, 2}, {1, -3}}));
    CHECK_FALSE(p.has_peripheral());

    // comments, blank lines, peripheral terms
    const GroupPresentation q = parse_presentation(
        "# trefoil as a torus knot\n"
        "gens: x, y\n"
        "\n"
        "rel: x^2*y^-3   # relator\n"
        "meridian: x*y^-1\n"
        "longitude: x^2*(x*y^-1)^-6\n"
        "peripheral: +0 @ x ; -0 @ x*y^-1\n");
    CHECK(q.has_peripheral());
    REQUIRE(q.peripheral_identity.size() == 2);
    CHECK(q.peripheral_identity[0].sign == 1);
    CHECK(q.peripheral_identity[1].sign == -1);
    CHECK(q.peripheral_identity[1].conjugator == parse_word("x*y^-1", q.generator_names));

    CHECK_THROWS_AS(parse_presentation("gens: x\nrel: y\n"), UnknownGenerator);
    CHECK_THROWS_AS(parse_presentation("gens: x, y\nrel: x\nrel: y\n"), DeficiencyMismatch);
    CHECK_THROWS_AS(parse_presentation("gens: x, y\n"), DeficiencyMismatch);
    CHECK_THROWS_AS(parse_presentation("rel: x\n"), SyntaxError);        // gens must come first
    CHECK_THROWS_AS(parse_presentation("gens: x, x\nrel: x\n"), SyntaxError);
    CHECK_THROWS_AS(parse_presentation("gens: x\nfoo: x\n"), SyntaxError);
    try {
        parse_presentation("gens: x, y\nrel: x^\n");
        CHECK(false);
    } catch (const SyntaxError& e) {
        CHECK(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("DSL round trip") {
    for (const GroupPresentation& p :
         {trefoil(), figure8(), torus_knot_presentation(3), torus_knot_presentation(5),
          torus_knot_presentation(7), parse_presentation("gens: x\nmeridian: x\n")}) {
        const GroupPresentation q = parse_presentation(to_dsl(p));
        CHECK(q.generator_names == p.generator_names);
        CHECK(q.relators == p.relators);
        CHECK(q.meridian == p.meridian);
        CHECK(q.longitude == p.longitude);
        REQUIRE(q.peripheral_identity.size() == p.peripheral_identity.size());
        for (size_t i = 0; i < q.peripheral_identity.size(); ++i) {
            CHECK(q.peripheral_identity[i].sign == p.peripheral_identity[i].sign);
            CHECK(q.peripheral_identity[i].relator == p.peripheral_identity[i].relator);
            CHECK(q.peripheral_identity[i].conjugator == p.peripheral_identity[i].conjugator);
        }
    }
}

TEST_CASE("representation validation") {
    const GroupPresentation p = torus_knot_presentation(3);
    CHECK_NOTHROW(Representation(p, torus3_images(0.4)));
    CHECK(Representation(p, torus3_images(0.4)).residual() < 1e-12);
    // wrong angle for y breaks the relator
    const UnitQuaternion x(0, 1, 0, 0);
    const UnitQuaternion bad(std::cos(0.7), std::sin(0.7), 0, 0);
    CHECK_THROWS_AS(Representation(p, {x, bad}), InvalidRepresentation);
    CHECK_THROWS_AS(Representation(p, {x}), InvalidParameter);
}

TEST_CASE("word evaluation") {
    const GroupPresentation p = torus_knot_presentation(3);
    const Representation rho(p, torus3_images(0.3));
    CHECK(evaluate_word(Word(), rho).dist(UnitQuaternion()) < 1e-15);
    CHECK(evaluate_word(Word::generator(0), rho).dist(UnitQuaternion(0, 1, 0, 0)) < 1e-15);

    // homomorphism on random free words
    std::mt19937_64 rng(23);
    std::uniform_int_distribution<int> gen(0, 1), exp(-3, 3);
    for (int k = 0; k < 100; ++k) {
        Word u, v;
        for (int i = 0; i < 6; ++i) {
            if (int e = exp(rng); e != 0) u = u * Word::generator(gen(rng), e);
            if (int e = exp(rng); e != 0) v = v * Word::generator(gen(rng), e);
        }
        const UnitQuaternion lhs = evaluate_word(u * v, rho);
        const UnitQuaternion rhs = evaluate_word(u, rho) * evaluate_word(v, rho);
        CHECK(lhs.dist(rhs) < 1e-12);
        CHECK(evaluate_word(u.inverse(), rho).dist(evaluate_word(u, rho).inverse()) < 1e-12);
    }

    // real part of the meridian image for the q=3, l=1 family
    for (double t : {0.1, 0.35, 0.6, 0.85}) {
        const Representation r(p, torus3_images(t));
        const UnitQuaternion m = evaluate_word(*p.meridian, r);
        const double expected = std::cos(std::numbers::pi / 6) * std::cos(std::numbers::pi * t);
        CHECK(std::abs(m.w - expected) < 1e-12);
    }
}

TEST_CASE("torus presentations") {
    const GroupPresentation p3 = torus_knot_presentation(3);
    const Word x = Word::generator(0), y = Word::generator(1);
    CHECK(p3.relators[0] == x.pow(2) * y.pow(-3));
    CHECK(*p3.meridian == x * y.pow(-1));
    CHECK(*p3.longitude == x.pow(2) * (x * y.pow(-1)).pow(-6));
    CHECK(*torus_knot_presentation(5).meridian == x * y.pow(-2));

    CHECK_THROWS_AS(torus_knot_presentation(4), InvalidParameter);
    CHECK_THROWS_AS(torus_knot_presentation(1), InvalidParameter);
    CHECK_THROWS_AS(torus_knot_presentation(-3), InvalidParameter);

    for (int q : {3, 5, 7, 9}) {
        CHECK(verify_peripheral_identity(torus_knot_presentation(q)));
    }
    // tampering with a sign breaks the identity
    GroupPresentation bad = torus_knot_presentation(3);
    bad.peripheral_identity[1].sign = +1;
    CHECK_FALSE(verify_peripheral_identity(bad));
    GroupPresentation wrong_conj = torus_knot_presentation(3);
    wrong_conj.peripheral_identity[0].conjugator = y;
    CHECK_FALSE(verify_peripheral_identity(wrong_conj));
    CHECK_THROWS_AS(verify_peripheral_identity(trefoil()), MissingPeripheralData);

    // peripheral images commute under any valid representation
    for (int q : {3, 5}) {
        const GroupPresentation p = torus_knot_presentation(q);
        std::vector<UnitQuaternion> imgs;
        if (q == 3) {
            imgs = torus3_images(0.45);
        } else {
            const double a = 3 * std::numbers::pi / 5;  // l = 2
            imgs = {UnitQuaternion(0, 1, 0, 0),
                    UnitQuaternion(std::cos(a), std::sin(a) * std::cos(0.2 * std::numbers::pi),
                                   std::sin(a) * std::sin(0.2 * std::numbers::pi), 0)};
        }
        const Representation rho(p, imgs);
        const UnitQuaternion lm = evaluate_word(*p.longitude * *p.meridian, rho);
        const UnitQuaternion ml = evaluate_word(*p.meridian * *p.longitude, rho);
        CHECK(lm.dist(ml) < 1e-10);
    }
}

TEST_CASE("abelianization exponents") {
    CHECK(abelianization_exponents(trefoil()) == std::vector<long long>{1, 1});
    CHECK(abelianization_exponents(figure8()) == std::vector<long long>{1, 1});
    CHECK(abelianization_exponents(torus_knot_presentation(3)) == std::vector<long long>{3, 2});
    CHECK(abelianization_exponents(torus_knot_presentation(5)) == std::vector<long long>{5, 2});
    CHECK(abelianization_exponents(torus_knot_presentation(7)) == std::vector<long long>{7, 2});

    // meridian fixes the overall sign
    GroupPresentation flipped = trefoil();
    flipped.meridian = Word::generator(0, -1);
    CHECK(abelianization_exponents(flipped) == std::vector<long long>{-1, -1});

    CHECK_THROWS_AS(abelianization_exponents(parse_presentation("gens: x, y\nrel: x^2\n")),
                    NotKnotLike);
    CHECK_THROWS_AS(abelianization_exponents(parse_presentation("gens: x, y\nrel: x*y*X*Y\n")),
                    NotKnotLike);
    // meridian not a generator of H1
    GroupPresentation badm = torus_knot_presentation(3);
    badm.meridian = Word::generator(1);  // y has exponent 2
    CHECK_THROWS_AS(abelianization_exponents(badm), NotKnotLike);
}
