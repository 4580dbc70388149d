#pragma once

#include "flatsurf/rational.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace flatsurf {

/// A vector (or point) of the flat plane with exact rational coordinates.
struct Vec2 {
    Rational x;
    Rational y;

    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator-(const Vec2& a) { return {-a.x, -a.y}; }
    friend Vec2 operator*(const Rational& s, const Vec2& a) { return {s * a.x, s * a.y}; }
};

inline Rational cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
inline Rational dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }

/// Vertices of one polygon, counterclockwise. Edge e runs vertex[e] -> vertex[e+1 mod n].
using Polygon = std::vector<Vec2>;

struct EdgeRef {
    std::size_t polygon = 0;
    std::size_t edge = 0;

    friend auto operator<=>(const EdgeRef&, const EdgeRef&) = default;
};

/// Corner `vertex` of polygon `polygon`, between edge vertex-1 (incoming) and edge vertex (outgoing).
struct Corner {
    std::size_t polygon = 0;
    std::size_t vertex = 0;

    friend auto operator<=>(const Corner&, const Corner&) = default;
};

/// Polygons glued along edges by translations.
///
/// `pairing[p][e]` is the partner of edge e of polygon p. A well-formed surface
/// has a fixed-point free involutive pairing with partner vectors opposite,
/// which `validate` checks; the struct itself is a plain value.
struct Surface {
    std::vector<Polygon> polygons;
    std::vector<std::vector<EdgeRef>> pairing;

    std::size_t edge_count() const;
    Vec2 edge_vector(EdgeRef e) const;
    const EdgeRef& partner(EdgeRef e) const { return pairing[e.polygon][e.edge]; }
};

struct ValidationReport {
    std::vector<std::string> violations;

    bool ok() const { return violations.empty(); }
};

/// An identified vertex of the surface with cone angle 2*pi*angle_turns.
struct ConePoint {
    std::vector<Corner> corners;
    int angle_turns = 0;

    int zero_order() const { return angle_turns - 1; }
};

/// Genus plus the zero orders, sorted descending. Regular points are not listed,
/// so the torus is (1, {}).
struct StratumSignature {
    int genus = 0;
    std::vector<int> orders;

    friend bool operator==(const StratumSignature&, const StratumSignature&) = default;
    std::string to_string() const;  // "H(2)", "H(1,1)", "H()"
};

struct PeriodData {
    /// One representative edge per glued pair (the smaller EdgeRef of the two).
    std::vector<EdgeRef> representatives;
    std::vector<Vec2> vectors;
    /// Rank of relative homology H_1(X, vertices; Q) read off the edge cell structure.
    int rank = 0;
};

ValidationReport validate(const Surface& s);

/// Corner orbits with exact cone angles. Precondition: validate(s).ok().
std::vector<ConePoint> singularities(const Surface& s);

/// Genus from the Euler characteristic, cross-checked against the zero orders.
int genus(const Surface& s);
StratumSignature stratum(const Surface& s);
PeriodData periods(const Surface& s);
bool is_integral(const Surface& s);

/// The direction (1, q) used to count cone-angle turns: first q in the
/// Calkin-Wilf order 0, 1, 1/2, 2, 1/3, 3/2, ... not parallel to any edge.
Vec2 reference_direction(const Surface& s);

/// Counterclockwise sector from `from` to `to` (angle in (0, 2*pi)) contains
/// direction r. r must not be parallel to either bound.
bool sector_contains(const Vec2& from, const Vec2& to, const Vec2& r);

Rational signed_area2(const Polygon& p);

// Construction helpers.

/// Reverses clockwise polygons and remaps the pairing accordingly.
Surface normalize_orientation(Surface s);

/// One polygon with an explicit list of (edge, edge) pairs; orientation is normalized.
Surface polygon_surface(Polygon vertices, std::span<const std::pair<std::size_t, std::size_t>> pairs);

/// The 2n-gon with edges v_1..v_n, -v_1..-v_n and edge i glued to edge i+n.
Surface centrally_symmetric_surface(std::span<const Vec2> sides);

Surface translate_polygon(Surface s, std::size_t polygon, const Vec2& offset);

/// Splits polygon p along the diagonal vertex i -> vertex j and glues the two new copies.
Surface cut_along_diagonal(const Surface& s, std::size_t polygon, std::size_t i, std::size_t j);

/// Removes both edges of the pair containing `edge` from a one-polygon surface and
/// rebuilds the vertex chain from the remaining edge vectors.
Surface collapse_edge_pair(const Surface& s, std::size_t edge);

}  // namespace flatsurf
