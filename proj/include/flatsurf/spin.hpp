#pragma once

#include "flatsurf/bitvec.hpp"
#include "flatsurf/origami.hpp"
#include "flatsurf/strata.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace flatsurf {

/// Center-graph step directions, in counterclockwise order.
enum class Direction : std::uint8_t { E = 0, N = 1, W = 2, S = 3 };

inline Direction opposite(Direction d) { return static_cast<Direction>((static_cast<int>(d) + 2) % 4); }
char to_char(Direction d);

struct Step {
    std::uint32_t square = 0;
    Direction dir = Direction::E;

    friend bool operator==(const Step&, const Step&) = default;
};

/// Closed walk through square centers; step i leaves steps[i].square towards steps[i].dir.
struct SimpleCycle {
    std::vector<Step> steps;
};

/// Neighbor of square s in direction dir.
std::uint32_t move(const Origami& o, std::uint32_t s, Direction dir);

/// Center-graph edge crossed by a step: 2*s for s -> h(s), 2*s+1 for s -> v(s).
std::uint32_t edge_id(const Origami& o, Step step);

/// Throws std::invalid_argument unless the cycle is closed, reduced and vertex-simple.
void check_cycle(const Origami& o, const SimpleCycle& c);

struct CycleBasis {
    std::vector<SimpleCycle> cycles;
    /// Non-tree edge owned by each cycle (its first step).
    std::vector<std::uint32_t> cotree_edges;

    /// Coordinates of a cycle of the center graph in this basis (mod 2).
    BitVec coordinates(const Origami& o, const SimpleCycle& c) const;
};

/// Fundamental cycles of the breadth-first spanning tree from square 1 (neighbor order E, N, W, S).
CycleBasis fundamental_cycles(const Origami& o);
/// Same construction over a random spanning tree.
CycleBasis fundamental_cycles(const Origami& o, std::uint64_t seed);

/// (left quarter-turns - right quarter-turns) / 4.
int turning_index(const SimpleCycle& c);

/// Intersection number mod 2 of two vertex-simple cycles.
bool pairing_mod2(const Origami& o, const SimpleCycle& a, const SimpleCycle& b);

struct QuadraticFormData {
    std::vector<SimpleCycle> cycles;
    std::vector<BitVec> pairing;  // rows of the symmetric pairing matrix
    std::vector<bool> q_values;   // Ind + 1 mod 2 per cycle
    std::vector<std::pair<BitVec, BitVec>> symplectic_basis;
    std::vector<BitVec> radical;
    int radical_rank = 0;
    int symplectic_rank = 0;

    bool form(const BitVec& x, const BitVec& y) const;
    /// q extended from the cycles by q(x+y) = q(x) + q(y) + x.y.
    bool q(const BitVec& x) const;
    bool arf() const;
};

class SpinError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Builds the form on the given cycles, reduces to a symplectic basis and checks
/// that q vanishes on the radical (throws SpinError "radical q nonzero" otherwise).
QuadraticFormData quadratic_form(const Origami& o, std::vector<SimpleCycle> cycles);

/// Arf invariant. Throws SpinError("spin undefined: odd zero order") for odd strata.
int spin_parity(const Origami& o);
int spin_parity(const Origami& o, const CycleBasis& basis);

struct InvolutionWitness {
    Permutation sigma;
    int fixed_centers = 0;
    int fixed_edge_midpoints = 0;
    int fixed_vertices = 0;
    /// Image of each cone point of corner_map(o) under the involution.
    std::vector<std::size_t> cone_image;

    int fixed_points() const { return fixed_centers + fixed_edge_midpoints + fixed_vertices; }
};

/// Every sigma with sigma h sigma^-1 = h^-1, sigma v sigma^-1 = v^-1 and sigma^2 = 1,
/// ordered by sigma(1), with its fixed-point data.
std::vector<InvolutionWitness> rotation_involutions(const Origami& o);

/// First rotation involution whose quotient has genus 0 (2g+2 fixed points).
std::optional<InvolutionWitness> hyperelliptic_involution(const Origami& o);

ComponentLabel classify_component(const Origami& o);

}  // namespace flatsurf
