#include "fixtures.hpp"

#include "flatsurf/gl2.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace flatsurf;
using fixtures::pt;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    Rational r(static_cast<long>(rng() % 19) - 9, 1 + rng() % 6);
    r.canonicalize();
    return r;
}

Mat2 random_matrix(std::mt19937_64& rng) {
    for (;;) {
        Mat2 m{random_rational(rng), random_rational(rng), random_rational(rng), random_rational(rng)};
        if (m.det() > 0) return m;
    }
}

std::vector<Surface> surfaces() {
    return {fixtures::octagon(), fixtures::decagon(), fixtures::unit_torus(), fixtures::five_squares_outline(),
            fixtures::symmetric_2n_gon(6), to_polygons(fixtures::l_origami())};
}

}  // namespace

TEST_CASE("identity and shear") {
    const Surface t = fixtures::unit_torus();
    const Surface same = apply(t, Mat2{});
    CHECK(same.polygons == t.polygons);
    const Surface sheared = apply(t, Mat2{1, 1, 0, 1});
    CHECK(sheared.polygons[0] == Polygon{pt(0, 0), pt(1, 0), pt(2, 1), pt(1, 1)});
    CHECK(validate(sheared).ok());
    CHECK(stratum(sheared) == StratumSignature{1, {}});
}

TEST_CASE("orientation-reversing matrices are rejected") {
    CHECK_THROWS_AS(apply(fixtures::unit_torus(), Mat2{1, 0, 0, -1}), OrientationError);
    CHECK_THROWS_AS(apply(fixtures::unit_torus(), Mat2{1, 2, 2, 4}), OrientationError);
    try {
        apply(fixtures::unit_torus(), Mat2{0, 1, 1, 0});
        FAIL("expected an error");
    } catch (const OrientationError& e) {
        CHECK(std::string(e.what()).find("orientation-reversing") != std::string::npos);
    }
}

TEST_CASE("random matrices keep the surface valid and its invariants") {
    std::mt19937_64 rng(fixtures::seed());
    for (const auto& s : surfaces()) {
        const auto sig = stratum(s);
        const auto before = periods(s);
        for (int i = 0; i < 100; ++i) {
            const Mat2 m = random_matrix(rng);
            const Surface t = apply(s, m);
            REQUIRE(validate(t).ok());
            CHECK(stratum(t) == sig);
            CHECK(genus(t) == sig.genus);
            const auto after = periods(t);
            CHECK(after.rank == before.rank);
            for (std::size_t k = 0; k < before.vectors.size(); ++k) CHECK(after.vectors[k] == m * before.vectors[k]);
        }
    }
}

TEST_CASE("composition") {
    std::mt19937_64 rng(fixtures::seed() + 1);
    const Surface s = fixtures::decagon();
    for (int i = 0; i < 20; ++i) {
        const Mat2 a = random_matrix(rng), b = random_matrix(rng);
        const Surface twice = apply(apply(s, a), b);
        const Surface once = apply(s, b * a);
        CHECK(twice.polygons == once.polygons);
        CHECK(stratum(twice) == stratum(once));
        CHECK(periods(twice).rank == periods(once).rank);
    }
}

TEST_CASE("rational rotations multiply periods by a unit complex number") {
    const std::pair<Rational, Rational> rotations[] = {
        {Rational(3, 5), Rational(4, 5)}, {Rational(5, 13), Rational(12, 13)}, {Rational(-8, 17), Rational(15, 17)}};
    for (const auto& s : surfaces()) {
        const auto p = periods(s).vectors;
        for (const auto& [c, sn] : rotations) {
            REQUIRE(c * c + sn * sn == 1);
            const Surface r = apply(s, Mat2{c, -sn, sn, c});
            CHECK(stratum(r) == stratum(s));
            const auto q = periods(r).vectors;
            for (std::size_t k = 0; k < p.size(); ++k) {
                CHECK(q[k].x == c * p[k].x - sn * p[k].y);
                CHECK(q[k].y == sn * p[k].x + c * p[k].y);
            }
        }
    }
}

TEST_CASE("Teichmueller flow samples") {
    const Surface s = fixtures::octagon();
    for (int k = 2; k <= 5; ++k) {
        const Surface t = apply(s, Mat2{Rational(k, 3), 0, 0, Rational(3, k)});
        CHECK(validate(t).ok());
        CHECK(stratum(t) == StratumSignature{2, {2}});
    }
}

TEST_CASE("linear relations among periods") {
    const Surface s = fixtures::five_squares_outline();
    const auto p = periods(s).vectors;
    // representatives: v1, v3, v4, v2
    REQUIRE(p.size() == 4);
    CHECK(p[1] == Rational(3) * p[0]);
    CHECK(p[2] == p[3]);
    const std::vector<PeriodRelation> rel = {{3, -1, 0, 0}, {0, 0, 1, -1}};
    CHECK(relations_hold(s, rel));
    std::mt19937_64 rng(fixtures::seed() + 2);
    for (int i = 0; i < 100; ++i) CHECK(check_linear_relations(s, rel, random_matrix(rng)));
    CHECK(check_linear_relations(s, {{0, 0, 0, 0}}, Mat2{2, 1, 1, 1}));
    CHECK(check_linear_relations(fixtures::octagon(), {{0, 0, 0, 0}}, Mat2{2, 1, 1, 1}));
    CHECK_THROWS_WITH_AS(check_linear_relations(s, {{1, 0, 0, 0}}, Mat2{}), doctest::Contains("precondition violated"),
                         std::invalid_argument);
    CHECK_FALSE(relations_hold(fixtures::octagon(), rel));
}
