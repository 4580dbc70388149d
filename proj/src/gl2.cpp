#include "flatsurf/gl2.hpp"

namespace flatsurf {

Surface apply(const Surface& s, Mat2 m) {
    for (Rational* x : {&m.a, &m.b, &m.c, &m.d}) x->canonicalize();
    if (m.det() <= 0) throw OrientationError("orientation-reversing matrix (det " + to_string(m.det()) + ")");
    Surface out = s;
    for (auto& poly : out.polygons)
        for (auto& v : poly) v = m * v;
    return out;
}

bool relations_hold(const Surface& s, const std::vector<PeriodRelation>& relations) {
    const PeriodData p = periods(s);
    for (const auto& rel : relations) {
        if (rel.size() != p.vectors.size())
            throw std::invalid_argument("relation has " + std::to_string(rel.size()) + " coefficients for " +
                                        std::to_string(p.vectors.size()) + " periods");
        Vec2 sum{0, 0};
        for (std::size_t i = 0; i < rel.size(); ++i) sum = sum + rel[i] * p.vectors[i];
        if (!(sum == Vec2{0, 0})) return false;
    }
    return true;
}

bool check_linear_relations(const Surface& s, const std::vector<PeriodRelation>& relations, const Mat2& m) {
    if (!relations_hold(s, relations)) throw std::invalid_argument("precondition violated: relation fails on the input surface");
    return relations_hold(apply(s, m), relations);
}

}  // namespace flatsurf
