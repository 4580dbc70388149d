#pragma once

#include "flatsurf/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace flatsurf {

/// Branch values a_1..a_{2g+2} of x^2 = (z - a_1)...(z - a_{2g+2}).
class BranchSet {
public:
    /// Throws std::invalid_argument unless the points are distinct and their count is even and >= 4.
    explicit BranchSet(std::vector<Rational> points);

    const std::vector<Rational>& points() const { return points_; }
    int genus() const { return static_cast<int>(points_.size()) / 2 - 1; }

private:
    std::vector<Rational> points_;
};

struct RootFactor {
    Rational root;
    int multiplicity = 1;
};

/// The one-form c * prod (z - b_j)^{k_j} dz / x.
class FactoredForm {
public:
    /// Merges repeated roots; throws for c == 0 or non-positive multiplicities.
    FactoredForm(Rational constant, std::vector<RootFactor> factors);

    /// "c*(z-b1)^k1*(z-b2)^k2", also "z", "z^3", "(z+1/2)", "1".
    static FactoredForm parse(std::string_view text);

    const Rational& constant() const { return constant_; }
    const std::vector<RootFactor>& factors() const { return factors_; }
    int degree() const;
    int multiplicity_at(const Rational& b) const;
    std::string to_string() const;

private:
    Rational constant_;
    std::vector<RootFactor> factors_;
};

enum class PlaceKind { Weierstrass, Conjugate, InfinityPlus, InfinityMinus };

/// A point of the curve. Weierstrass: the point over branch value `index`.
/// Conjugate: one of the two points over the non-branch value `value` (sheet +1 or -1).
struct Place {
    PlaceKind kind = PlaceKind::Weierstrass;
    std::size_t index = 0;
    Rational value;
    int sheet = 0;

    std::string to_string() const;
};

struct DivisorEntry {
    Place place;
    int order = 0;
};

struct DivisorOnCurve {
    std::vector<DivisorEntry> entries;

    int degree() const;
    bool effective() const;
};

/// Zero/pole divisor of f(z) dz / x; zero orders omitted.
DivisorOnCurve divisor_of_form(const BranchSet& b, const FactoredForm& f);
bool is_holomorphic(const BranchSet& b, const FactoredForm& f);

struct BasisCheck {
    int genus = 0;
    std::vector<bool> holomorphic;  // z^k dz/x for k = 0..g-1
    bool next_is_holomorphic = false;  // z^g dz/x

    bool ok() const;
};

BasisCheck basis_check(const BranchSet& b);

/// h^0(k W) for a Weierstrass point W; gap sequence 1, 3, ..., 2g-1. Requires 0 <= k <= 2g-1.
int h0_weierstrass_multiple(int k, int g);

/// Parity of z^{g-1} dz / x, whose divisor is (2g-2) W.
int hyperelliptic_component_parity(int g);

/// Comma-separated rationals, e.g. "0,1,2,3,4,5" or "0, 1/2, -3".
std::vector<Rational> parse_rational_list(std::string_view text);

}  // namespace flatsurf
