#pragma once

#include "flatsurf/flatcore.hpp"
#include "flatsurf/permutation.hpp"

#include <array>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

namespace flatsurf {

/// Square-tiled surface. Square s has h(s) on its right and v(s) on top.
struct Origami {
    Permutation h;
    Permutation v;

    std::size_t degree() const { return h.size(); }
};

class OrigamiError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Throws OrigamiError("not connected") unless <h, v> is transitive.
Origami make_origami(Permutation h, Permutation v);
/// 1-based cycle strings, e.g. make_origami(5, "(1,2,3,4)", "(1,5)").
Origami make_origami(std::size_t d, std::string_view h, std::string_view v);

bool is_transitive(const Permutation& h, const Permutation& v);

/// Unit squares, one polygon per square (index = square). Each h-cycle is laid
/// out as a horizontal row; rows are stacked with a gap. Corner k of polygon s is
/// 0 lower-left, 1 lower-right, 2 upper-right, 3 upper-left.
Surface to_polygons(const Origami& o);

/// c = h v h^-1 v^-1 (right to left).
Permutation corner_permutation(const Origami& o);

/// Zero orders from the cycles of corner_permutation, unchecked.
StratumSignature commutator_signature(const Origami& o);

/// commutator_signature, verified against flatcore::stratum(to_polygons(o)).
/// Throws std::logic_error on disagreement.
StratumSignature singularity_orders(const Origami& o);

/// Cone points of to_polygons(o) and, per square, the cone index of each of its four corners.
struct CornerMap {
    std::vector<ConePoint> cones;
    std::vector<std::array<std::size_t, 4>> cone_of;
};
CornerMap corner_map(const Origami& o);

/// Minimal breadth-first relabeling code: h' then v' as 0-based tables.
struct CanonicalForm {
    std::vector<std::uint32_t> code;

    std::size_t degree() const { return code.size() / 2; }
    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
};

CanonicalForm canonical_form(const Origami& o);
bool is_isomorphic(const Origami& a, const Origami& b);
Origami from_canonical(const CanonicalForm& c);

/// Horizontal shear: (h, v) -> (h, v h^-1).
Origami act_T(const Origami& o);
Origami act_T_inverse(const Origami& o);
/// Quarter rotation: (h, v) -> (v, h^-1).
Origami act_S(const Origami& o);

struct OrbitEdge {
    std::size_t from = 0;
    char generator = 'S';  // 'S', 'T' or 't' (T inverse)
    std::size_t to = 0;

    friend bool operator==(const OrbitEdge&, const OrbitEdge&) = default;
};

struct OrbitData {
    /// Sorted.
    std::vector<CanonicalForm> elements;
    /// Sizes of the <T>-orbits, sorted descending.
    std::vector<std::size_t> cusp_widths;
    /// Generator action on element indices, sorted by (from, generator).
    std::vector<OrbitEdge> edges;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// SL2(Z)-orbit of o up to isomorphism. Throws BudgetExceeded past max_elements.
OrbitData orbit(const Origami& o, std::size_t max_elements);

struct Cylinder {
    int width = 0;
    int height = 0;

    friend bool operator==(const Cylinder&, const Cylinder&) = default;
};

/// Horizontal cylinders: rows of squares (h-cycles) stacked while the interface
/// between them carries no singular vertex. Sorted by width then height, descending.
std::vector<Cylinder> cylinders(const Origami& o);

/// All degree-d origamis up to isomorphism, sorted by canonical form. When
/// `stratum` is set only that stratum is produced; it is tested before
/// canonicalization. Feasible up to d = 10 for a single stratum.
std::vector<Origami> enumerate_origamis(std::size_t d, std::optional<StratumSignature> stratum = std::nullopt);

/// Checks the conventions every other routine relies on; throws std::logic_error.
/// Commutator orders match the polygon vertex chase, T preserves the corner
/// permutation exactly and S^4 is the identity.
void verify_conventions();

}  // namespace flatsurf
