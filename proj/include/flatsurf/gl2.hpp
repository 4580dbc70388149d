#pragma once

#include "flatsurf/flatcore.hpp"

#include <stdexcept>
#include <vector>

namespace flatsurf {

/// [[a, b], [c, d]] acting on column vectors.
struct Mat2 {
    Rational a = 1, b = 0, c = 0, d = 1;

    Rational det() const { return a * d - b * c; }
    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const Mat2&, const Mat2&) = default;
};

class OrientationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Maps every vertex by m; the gluing is unchanged. Throws OrientationError for det <= 0.
Surface apply(const Surface& s, Mat2 m);

/// Coefficients over the period representatives of `periods(s)`.
using PeriodRelation = std::vector<Rational>;

/// True when every relation holds on periods(s).
bool relations_hold(const Surface& s, const std::vector<PeriodRelation>& relations);

/// Whether the relations still hold after apply(s, m). Throws std::invalid_argument
/// ("precondition violated") when they do not hold on s itself.
bool check_linear_relations(const Surface& s, const std::vector<PeriodRelation>& relations, const Mat2& m);

}  // namespace flatsurf
