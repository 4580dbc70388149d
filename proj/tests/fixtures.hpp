#pragma once

#include "flatsurf/flatcore.hpp"
#include "flatsurf/origami.hpp"

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <random>
#include <string>

namespace fixtures {

using flatsurf::Origami;
using flatsurf::Surface;
using flatsurf::Vec2;

inline Vec2 pt(long x, long y) { return {x, y}; }

inline std::vector<std::pair<std::size_t, std::size_t>> opposite_pairs(std::size_t n) {
    std::vector<std::pair<std::size_t, std::size_t>> p;
    for (std::size_t i = 0; i < n / 2; ++i) p.emplace_back(i, i + n / 2);
    return p;
}

/// Genus-2 octagon with one 6pi vertex.
inline Surface octagon() {
    flatsurf::Polygon p = {pt(0, 0), pt(4, 3), pt(6, 10), pt(10, 10), pt(14, 6), pt(10, 3), pt(8, -4), pt(4, -4)};
    return flatsurf::polygon_surface(p, opposite_pairs(8));
}

/// Genus-2 decagon with two 4pi vertices.
inline Surface decagon() {
    flatsurf::Polygon p = {pt(0, 0), pt(2, 3),  pt(2, 6),  pt(5, 8),  pt(9, 4),
                           pt(10, 1), pt(8, -2), pt(8, -5), pt(5, -7), pt(1, -3)};
    return flatsurf::polygon_surface(p, opposite_pairs(10));
}

/// Index of the decagon's v5 edge (from (9,4) to (10,1)) after orientation normalization.
inline std::size_t decagon_v5_edge(const Surface& s) {
    const auto& poly = s.polygons[0];
    for (std::size_t e = 0; e < poly.size(); ++e) {
        const Vec2 v = s.edge_vector({0, e});
        if ((v == Vec2{1, -3}) || (v == Vec2{-1, 3})) return e;
    }
    return poly.size();
}

inline Surface unit_torus() {
    flatsurf::Polygon p = {pt(0, 0), pt(1, 0), pt(1, 1), pt(0, 1)};
    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 2}, {1, 3}};
    return flatsurf::polygon_surface(p, pairs);
}

/// 2n-gon of type v_1 + ... + v_n = v_n + ... + v_1.
inline Surface symmetric_2n_gon(int n) {
    std::vector<Vec2> sides;
    for (int k = 0; k < n; ++k) sides.push_back(pt(1, k - n / 2));
    return flatsurf::centrally_symmetric_surface(sides);
}

/// Outline of the five-square surface: edges v1, v3, v4, -v3, v2, -v1, -v2, -v4 with v3 = 3 v1, v4 = v2.
inline Surface five_squares_outline() {
    flatsurf::Polygon p = {pt(0, 0), pt(1, 0), pt(4, 0), pt(4, 1), pt(1, 1), pt(1, 2), pt(0, 2), pt(0, 1)};
    const std::pair<std::size_t, std::size_t> pairs[] = {{0, 5}, {1, 3}, {2, 7}, {4, 6}};
    return flatsurf::polygon_surface(p, pairs);
}

inline Origami torus_origami() { return flatsurf::make_origami(1, "()", "()"); }
inline Origami five_squares() { return flatsurf::make_origami(5, "(1,2,3,4)", "(1,5)"); }
inline Origami l_origami() { return flatsurf::make_origami(3, "(1,2)", "(1,3)"); }

inline std::uint64_t seed() {
    if (const char* s = std::getenv("FLATSURF_SEED")) return std::strtoull(s, nullptr, 10);
    return 20240917;
}

inline flatsurf::Permutation random_permutation(std::size_t d, std::mt19937_64& rng) {
    std::vector<std::uint32_t> img(d);
    std::iota(img.begin(), img.end(), 0u);
    std::shuffle(img.begin(), img.end(), rng);
    return flatsurf::Permutation(std::move(img));
}

inline Origami random_origami(std::size_t d, std::mt19937_64& rng) {
    for (;;) {
        auto h = random_permutation(d, rng);
        auto v = random_permutation(d, rng);
        if (flatsurf::is_transitive(h, v)) return Origami{std::move(h), std::move(v)};
    }
}

}  // namespace fixtures
