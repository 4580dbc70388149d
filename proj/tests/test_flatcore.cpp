#include "fixtures.hpp"

#include "flatsurf/flatcore.hpp"

#include <doctest.h>

#include <algorithm>

using namespace flatsurf;
using fixtures::pt;

namespace {

bool mentions(const ValidationReport& r, const std::string& needle) {
    return std::any_of(r.violations.begin(), r.violations.end(),
                       [&](const std::string& v) { return v.find(needle) != std::string::npos; });
}

Surface square(std::vector<std::pair<std::size_t, std::size_t>> pairs) {
    Surface s;
    s.polygons = {{pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)}};
    s.pairing.assign(1, std::vector<EdgeRef>(4));
    for (auto [a, b] : pairs) {
        s.pairing[0][a] = {0, b};
        s.pairing[0][b] = {0, a};
    }
    return s;
}

Surface scaled(const Surface& s, const Rational& k) {
    Surface out = s;
    for (auto& poly : out.polygons)
        for (auto& v : poly) v = k * v;
    return out;
}

int total_turns(const Surface& s) {
    int t = 0;
    for (const auto& c : singularities(s)) t += c.angle_turns;
    return t;
}

}  // namespace

TEST_CASE("validate accepts the basic fixtures") {
    CHECK(validate(fixtures::octagon()).ok());
    CHECK(validate(fixtures::decagon()).ok());
    CHECK(validate(square({{0, 2}, {1, 3}})).ok());
    CHECK(validate(fixtures::five_squares_outline()).ok());
}

TEST_CASE("validate reports violations as data") {
    SUBCASE("bottom glued to left") {
        const auto r = validate(square({{0, 3}, {1, 2}}));
        CHECK_FALSE(r.ok());
        CHECK(mentions(r, "paired edge vectors not opposite"));
    }
    SUBCASE("clockwise polygon") {
        Surface s = square({{0, 2}, {1, 3}});
        std::reverse(s.polygons[0].begin(), s.polygons[0].end());
        CHECK_FALSE(validate(s).ok());
        CHECK(validate(normalize_orientation(s)).ok());
    }
    SUBCASE("zero-length edge") {
        Surface s = square({{0, 2}, {1, 3}});
        s.polygons[0].insert(s.polygons[0].begin() + 1, pt(1, 0));
        s.pairing[0].push_back({0, 4});
        CHECK(mentions(validate(s), "zero-length"));
    }
    SUBCASE("self-intersecting boundary") {
        Surface s = square({{0, 2}, {1, 3}});
        s.polygons[0] = {pt(0, 0), pt(1, 1), pt(1, 0), pt(0, 1)};
        CHECK_FALSE(validate(s).ok());
    }
    SUBCASE("too few vertices") {
        Surface s;
        s.polygons = {{pt(0, 0), pt(1, 0)}};
        s.pairing = {{{0, 1}, {0, 0}}};
        CHECK_FALSE(validate(s).ok());
    }
    SUBCASE("edge glued to itself") {
        Surface s = square({{0, 2}, {1, 3}});
        s.pairing[0][0] = {0, 0};
        CHECK_FALSE(validate(s).ok());
    }
    SUBCASE("pairing not involutive") {
        Surface s = square({{0, 2}, {1, 3}});
        s.pairing[0][0] = {0, 1};
        CHECK_FALSE(validate(s).ok());
    }
    SUBCASE("two separate tori") {
        Surface s = fixtures::unit_torus();
        Surface t = translate_polygon(fixtures::unit_torus(), 0, pt(5, 0));
        s.polygons.push_back(t.polygons[0]);
        s.pairing.push_back({{1, 2}, {1, 3}, {1, 0}, {1, 1}});
        CHECK(mentions(validate(s), "disconnected"));
    }
    SUBCASE("edge index out of range") {
        Surface s = square({{0, 2}, {1, 3}});
        s.pairing[0][1] = {0, 9};
        CHECK_FALSE(validate(s).ok());
    }
}

TEST_CASE("octagon: one point of angle 6pi") {
    const auto cones = singularities(fixtures::octagon());
    REQUIRE(cones.size() == 1);
    CHECK(cones[0].corners.size() == 8);
    CHECK(cones[0].angle_turns == 3);
    CHECK(cones[0].zero_order() == 2);
    CHECK(genus(fixtures::octagon()) == 2);
    CHECK(stratum(fixtures::octagon()) == StratumSignature{2, {2}});
    CHECK(stratum(fixtures::octagon()).to_string() == "H(2)");
}

TEST_CASE("decagon: two points of angle 4pi") {
    const auto cones = singularities(fixtures::decagon());
    REQUIRE(cones.size() == 2);
    for (const auto& c : cones) {
        CHECK(c.corners.size() == 5);
        CHECK(c.angle_turns == 2);
    }
    CHECK(genus(fixtures::decagon()) == 2);
    CHECK(stratum(fixtures::decagon()) == StratumSignature{2, {1, 1}});
}

TEST_CASE("decagon degenerates to H(2) when v5 shrinks away") {
    const Surface dec = fixtures::decagon();
    const std::size_t e = fixtures::decagon_v5_edge(dec);
    REQUIRE(e < 10);
    const Surface oct = collapse_edge_pair(dec, e);
    REQUIRE(validate(oct).ok());
    CHECK(oct.polygons[0].size() == 8);
    CHECK(stratum(oct) == StratumSignature{2, {2}});
    CHECK(periods(oct).rank == 4);
}

TEST_CASE("torus: a single regular point") {
    const Surface t = fixtures::unit_torus();
    const auto cones = singularities(t);
    REQUIRE(cones.size() == 1);
    CHECK(cones[0].angle_turns == 1);
    CHECK(cones[0].zero_order() == 0);
    CHECK(cones[0].corners.size() == 4);
    CHECK(genus(t) == 1);
    CHECK(stratum(t) == StratumSignature{1, {}});
    CHECK(stratum(t).to_string() == "H()");
}

TEST_CASE("2n-gons of type v1 + ... + vn = vn + ... + v1") {
    for (int n = 3; n <= 8; ++n) {
        CAPTURE(n);
        const Surface s = fixtures::symmetric_2n_gon(n);
        REQUIRE(validate(s).ok());
        const int g = n % 2 == 0 ? n / 2 : (n - 1) / 2;
        CHECK(genus(s) == g);
        const auto sig = stratum(s);
        if (n % 2 == 0) {
            CHECK(sig.orders == std::vector<int>{n - 2});
        } else if (n > 3) {
            CHECK(sig.orders == std::vector<int>{(n - 3) / 2, (n - 3) / 2});
        } else {
            CHECK(sig.orders.empty());
        }
        const int cone_points = static_cast<int>(singularities(s).size());
        CHECK(periods(s).rank == 2 * g + cone_points - 1);
    }
    CHECK(genus(fixtures::symmetric_2n_gon(6)) == 3);
    CHECK(stratum(fixtures::symmetric_2n_gon(7)) == StratumSignature{3, {2, 2}});
}

TEST_CASE("periods") {
    SUBCASE("octagon") {
        const auto p = periods(fixtures::octagon());
        CHECK(p.vectors.size() == 4);
        CHECK(p.representatives.size() == 4);
        CHECK(p.rank == 4);
    }
    SUBCASE("torus") {
        const auto p = periods(fixtures::unit_torus());
        CHECK(p.vectors.size() == 2);
        CHECK(p.rank == 2);
    }
    SUBCASE("five unit squares carry two extra regular vertices") {
        const Surface s = to_polygons(fixtures::five_squares());
        const auto p = periods(s);
        CHECK(p.vectors.size() == 10);
        CHECK(singularities(s).size() == 3);
        CHECK(p.rank == 6);
    }
    SUBCASE("the same surface as one octagon") {
        const auto p = periods(fixtures::five_squares_outline());
        CHECK(p.vectors.size() == 4);
        CHECK(p.rank == 4);
    }
    SUBCASE("every representative is the smaller edge of its pair") {
        const Surface s = fixtures::decagon();
        for (const auto& r : periods(s).representatives) CHECK(r < s.partner(r));
    }
}

TEST_CASE("integrality") {
    CHECK(is_integral(fixtures::octagon()));
    CHECK_FALSE(is_integral(scaled(fixtures::octagon(), Rational(1, 3))));
    CHECK(is_integral(to_polygons(fixtures::five_squares())));
    CHECK(is_integral(to_polygons(fixtures::l_origami())));
}

TEST_CASE("interior angles add up to the cone angles") {
    const Surface surfaces[] = {fixtures::octagon(), fixtures::decagon(), fixtures::unit_torus(),
                                fixtures::five_squares_outline(), fixtures::symmetric_2n_gon(7),
                                to_polygons(fixtures::five_squares())};
    for (const auto& s : surfaces) {
        // a k-gon has interior angle sum (k - 2) pi
        int half_turns = 0;
        for (const auto& poly : s.polygons) half_turns += static_cast<int>(poly.size()) - 2;
        CHECK(half_turns == 2 * total_turns(s));
        const auto sig = stratum(s);
        int orders = 0;
        for (int m : sig.orders) orders += m;
        if (sig.genus >= 2) CHECK(orders == 2 * sig.genus - 2);
    }
}

TEST_CASE("cutting along a diagonal changes nothing") {
    const Surface oct = fixtures::octagon();
    int cuts = 0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = i + 2; j < 8; ++j) {
            if (i == 0 && j == 7) continue;
            const Surface cut = cut_along_diagonal(oct, 0, i, j);
            if (!validate(cut).ok()) continue;  // diagonal leaves the polygon
            CAPTURE(i);
            CAPTURE(j);
            ++cuts;
            CHECK(cut.polygons.size() == 2);
            CHECK(stratum(cut) == stratum(oct));
            CHECK(genus(cut) == 2);
            CHECK(periods(cut).rank == 4);
            CHECK(total_turns(cut) == 3);
        }
    CHECK(cuts >= 5);
    const Surface fixed = cut_along_diagonal(oct, 0, 0, 4);
    REQUIRE(validate(fixed).ok());
    CHECK(stratum(fixed) == StratumSignature{2, {2}});
}

TEST_CASE("translating a polygon changes nothing observable") {
    const Surface dec = fixtures::decagon();
    const Surface moved = translate_polygon(dec, 0, {Rational(7, 3), Rational(-5)});
    REQUIRE(validate(moved).ok());
    CHECK(stratum(moved) == stratum(dec));
    CHECK(genus(moved) == genus(dec));
    CHECK(periods(moved).vectors == periods(dec).vectors);
    CHECK(periods(moved).rank == periods(dec).rank);
    const auto a = singularities(dec), b = singularities(moved);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].corners == b[i].corners);
        CHECK(a[i].angle_turns == b[i].angle_turns);
    }
    CHECK(is_integral(moved) == is_integral(dec));

    const Surface squares = to_polygons(fixtures::five_squares());
    const Surface shifted = translate_polygon(squares, 4, pt(10, 10));
    CHECK(validate(shifted).ok());
    CHECK(stratum(shifted) == stratum(squares));
}

TEST_CASE("reference direction avoids every edge direction") {
    CHECK(reference_direction(fixtures::unit_torus()) == Vec2{1, 1});
    const Surface s = fixtures::symmetric_2n_gon(8);
    const Vec2 r = reference_direction(s);
    for (std::size_t e = 0; e < s.polygons[0].size(); ++e) CHECK(cross(r, s.edge_vector({0, e})) != 0);
}

TEST_CASE("sector membership") {
    const Vec2 e{1, 0}, n{0, 1}, w{-1, 0}, sw{-1, -1};
    CHECK(sector_contains(e, n, {1, 1}));
    CHECK_FALSE(sector_contains(n, e, {1, 1}));
    CHECK(sector_contains(n, e, {-1, -1}));
    CHECK(sector_contains(e, w, {1, 1}));
    CHECK_FALSE(sector_contains(e, w, {1, -1}));
    CHECK(sector_contains(e, sw, {-1, 1}));
    CHECK_FALSE(sector_contains(e, sw, {1, -2}));
}

TEST_CASE("signed area") {
    CHECK(signed_area2(fixtures::unit_torus().polygons[0]) == 2);
    Polygon cw = fixtures::unit_torus().polygons[0];
    std::reverse(cw.begin(), cw.end());
    CHECK(signed_area2(cw) == -2);
}
