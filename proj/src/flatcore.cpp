#include "flatsurf/flatcore.hpp"
#include "flatsurf/linalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace flatsurf {

std::size_t Surface::edge_count() const {
    std::size_t n = 0;
    for (const auto& p : polygons) n += p.size();
    return n;
}

Vec2 Surface::edge_vector(EdgeRef e) const {
    const Polygon& p = polygons[e.polygon];
    return p[(e.edge + 1) % p.size()] - p[e.edge];
}

std::string StratumSignature::to_string() const {
    std::ostringstream os;
    os << "H(";
    for (std::size_t i = 0; i < orders.size(); ++i) os << (i ? "," : "") << orders[i];
    os << ")";
    return os.str();
}

Rational signed_area2(const Polygon& p) {
    Rational a = 0;
    for (std::size_t i = 0; i < p.size(); ++i) a += cross(p[i], p[(i + 1) % p.size()]);
    return a;
}

namespace {

int sign(const Rational& r) { return sgn(r); }

// Closed segments ab and cd share a point.
bool segments_meet(const Vec2& a, const Vec2& b, const Vec2& c, const Vec2& d) {
    int o1 = sign(cross(b - a, c - a));
    int o2 = sign(cross(b - a, d - a));
    int o3 = sign(cross(d - c, a - c));
    int o4 = sign(cross(d - c, b - c));
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    auto on_segment = [](const Vec2& p, const Vec2& q, const Vec2& r) {
        // r collinear with pq; is it within the bounding box?
        return std::min(p.x, q.x) <= r.x && r.x <= std::max(p.x, q.x) && std::min(p.y, q.y) <= r.y &&
               r.y <= std::max(p.y, q.y);
    };
    if (o1 == 0 && on_segment(a, b, c)) return true;
    if (o2 == 0 && on_segment(a, b, d)) return true;
    if (o3 == 0 && on_segment(c, d, a)) return true;
    if (o4 == 0 && on_segment(c, d, b)) return true;
    return false;
}

std::string edge_name(EdgeRef e) {
    return "edge " + std::to_string(e.edge) + " of polygon " + std::to_string(e.polygon);
}

void check_polygon(const Polygon& p, std::size_t index, std::vector<std::string>& out) {
    const std::string name = "polygon " + std::to_string(index);
    const std::size_t n = p.size();
    if (n < 3) {
        out.push_back(name + " has fewer than 3 vertices");
        return;
    }
    bool degenerate = false;
    for (std::size_t i = 0; i < n; ++i) {
        if (p[i] == p[(i + 1) % n]) {
            out.push_back(name + " has a zero-length edge " + std::to_string(i));
            degenerate = true;
        }
    }
    if (degenerate) return;

    bool simple = true;
    for (std::size_t i = 0; i < n && simple; ++i) {
        const Vec2& a = p[i];
        const Vec2& b = p[(i + 1) % n];
        // Consecutive edges may only touch at their shared vertex.
        const Vec2& c = p[(i + 2) % n];
        if (cross(b - a, c - b) == 0 && dot(b - a, c - b) < 0) simple = false;
        for (std::size_t j = i + 2; j < n && simple; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_meet(a, b, p[j], p[(j + 1) % n])) simple = false;
        }
    }
    if (!simple) {
        out.push_back(name + " is not a simple closed curve");
        return;
    }
    if (signed_area2(p) <= 0) out.push_back(name + " is not counterclockwise (signed area <= 0)");
}

struct UnionFind {
    std::vector<std::size_t> parent;
    explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    std::size_t find(std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(std::size_t a, std::size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

bool sector_contains(const Vec2& from, const Vec2& to, const Vec2& r) {
    int turn = sign(cross(from, to));
    int a = sign(cross(from, r));
    int b = sign(cross(r, to));
    if (turn > 0) return a > 0 && b > 0;
    if (turn < 0) return a > 0 || b > 0;
    if (dot(from, to) < 0) return a > 0;  // straight angle
    throw std::logic_error("sector_contains: zero-angle corner");
}

ValidationReport validate(const Surface& s) {
    ValidationReport report;
    auto& out = report.violations;
    if (s.polygons.empty()) {
        out.push_back("surface has no polygons");
        return report;
    }
    for (std::size_t i = 0; i < s.polygons.size(); ++i) check_polygon(s.polygons[i], i, out);

    if (s.pairing.size() != s.polygons.size()) {
        out.push_back("pairing table has " + std::to_string(s.pairing.size()) + " rows for " +
                      std::to_string(s.polygons.size()) + " polygons");
        return report;
    }
    bool indices_ok = true;
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        if (s.pairing[p].size() != s.polygons[p].size()) {
            out.push_back("pairing row " + std::to_string(p) + " does not match the edge count");
            indices_ok = false;
            continue;
        }
        for (std::size_t e = 0; e < s.pairing[p].size(); ++e) {
            const EdgeRef& q = s.pairing[p][e];
            if (q.polygon >= s.polygons.size() || q.edge >= s.polygons[q.polygon].size()) {
                out.push_back(edge_name({p, e}) + " is paired with an edge out of range");
                indices_ok = false;
            }
        }
    }
    if (!indices_ok) return report;

    bool shapes_ok = std::all_of(s.polygons.begin(), s.polygons.end(), [](const Polygon& p) { return p.size() >= 3; });
    UnionFind uf(s.polygons.size());
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        for (std::size_t e = 0; e < s.polygons[p].size(); ++e) {
            const EdgeRef self{p, e};
            const EdgeRef& q = s.partner(self);
            if (q == self) {
                out.push_back(edge_name(self) + " is paired with itself");
                continue;
            }
            if (s.partner(q) != self) {
                out.push_back("pairing is not an involution at " + edge_name(self));
                continue;
            }
            uf.unite(p, q.polygon);
            if (self < q && shapes_ok && s.edge_vector(q) != -s.edge_vector(self))
                out.push_back("paired edge vectors not opposite: " + edge_name(self) + " and " + edge_name(q));
        }
    }
    for (std::size_t p = 1; p < s.polygons.size(); ++p) {
        if (uf.find(p) != uf.find(0)) {
            out.push_back("gluing graph is disconnected");
            break;
        }
    }
    return report;
}

Vec2 reference_direction(const Surface& s) {
    std::vector<Vec2> edges;
    for (std::size_t p = 0; p < s.polygons.size(); ++p)
        for (std::size_t e = 0; e < s.polygons[p].size(); ++e) edges.push_back(s.edge_vector({p, e}));

    Rational q = 0;
    for (;;) {
        Vec2 r{1, q};
        if (std::none_of(edges.begin(), edges.end(), [&](const Vec2& v) { return cross(r, v) == 0; })) return r;
        // Calkin-Wilf successor enumerates every positive rational once.
        mpz_class fl;
        mpz_fdiv_q(fl.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
        q = 1 / (2 * Rational(fl) - q + 1);
    }
}

std::vector<ConePoint> singularities(const Surface& s) {
    const Vec2 ref = reference_direction(s);
    std::vector<std::vector<bool>> seen(s.polygons.size());
    for (std::size_t p = 0; p < s.polygons.size(); ++p) seen[p].assign(s.polygons[p].size(), false);
    const std::size_t total = s.edge_count();

    std::vector<ConePoint> points;
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        for (std::size_t v = 0; v < s.polygons[p].size(); ++v) {
            if (seen[p][v]) continue;
            ConePoint cone;
            int crossings = 0;
            Corner c{p, v};
            do {
                if (seen[c.polygon][c.vertex] || cone.corners.size() > total)
                    throw std::logic_error("singularities: corner orbit does not close");
                seen[c.polygon][c.vertex] = true;
                cone.corners.push_back(c);

                const Polygon& poly = s.polygons[c.polygon];
                const std::size_t n = poly.size();
                const Vec2 out = poly[(c.vertex + 1) % n] - poly[c.vertex];
                const Vec2 back = poly[(c.vertex + n - 1) % n] - poly[c.vertex];
                if (sector_contains(out, back, ref)) ++crossings;

                // Rotating past the incoming edge lands on its partner, whose start is this vertex.
                const EdgeRef next = s.partner({c.polygon, (c.vertex + n - 1) % n});
                c = {next.polygon, next.edge};
            } while (c != Corner{p, v});
            if (crossings < 1) throw std::logic_error("singularities: cone point with zero turns");
            cone.angle_turns = crossings;
            points.push_back(std::move(cone));
        }
    }
    return points;
}

namespace {

int euler_genus(const Surface& s, std::size_t vertex_count) {
    const long v = static_cast<long>(vertex_count);
    const long e = static_cast<long>(s.edge_count() / 2);
    const long f = static_cast<long>(s.polygons.size());
    const long chi = v - e + f;
    if ((2 - chi) % 2 != 0 || chi > 2) throw std::logic_error("genus: Euler characteristic " + std::to_string(chi) + " is not 2-2g");
    return static_cast<int>((2 - chi) / 2);
}

StratumSignature signature_of(const Surface& s, const std::vector<ConePoint>& cones) {
    StratumSignature sig;
    sig.genus = euler_genus(s, cones.size());
    int total = 0;
    for (const auto& c : cones) {
        total += c.zero_order();
        if (c.zero_order() > 0) sig.orders.push_back(c.zero_order());
    }
    if (total != 2 * sig.genus - 2)
        throw std::logic_error("genus: zero orders sum to " + std::to_string(total) + " but Euler characteristic gives g = " +
                               std::to_string(sig.genus));
    std::sort(sig.orders.rbegin(), sig.orders.rend());
    return sig;
}

}  // namespace

int genus(const Surface& s) { return signature_of(s, singularities(s)).genus; }

StratumSignature stratum(const Surface& s) { return signature_of(s, singularities(s)); }

PeriodData periods(const Surface& s) {
    const auto cones = singularities(s);
    const int g = signature_of(s, cones).genus;

    PeriodData data;
    std::map<EdgeRef, std::size_t> column;
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        for (std::size_t e = 0; e < s.polygons[p].size(); ++e) {
            const EdgeRef self{p, e};
            if (self < s.partner(self)) {
                column[self] = data.representatives.size();
                data.representatives.push_back(self);
                data.vectors.push_back(s.edge_vector(self));
            }
        }
    }

    // Each polygon boundary is a relation among the pair generators.
    std::vector<std::vector<Rational>> relations;
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        std::vector<Rational> row(data.representatives.size(), 0);
        for (std::size_t e = 0; e < s.polygons[p].size(); ++e) {
            const EdgeRef self{p, e};
            const EdgeRef& q = s.partner(self);
            if (self < q)
                row[column.at(self)] += 1;
            else
                row[column.at(q)] -= 1;
        }
        relations.push_back(std::move(row));
    }
    data.rank = static_cast<int>(data.representatives.size()) - static_cast<int>(exact_rank(relations));

    const int expected = 2 * g + static_cast<int>(cones.size()) - 1;
    if (data.rank != expected)
        throw std::logic_error("periods: rank " + std::to_string(data.rank) + " differs from 2g+n-1 = " + std::to_string(expected));
    return data;
}

bool is_integral(const Surface& s) {
    for (std::size_t p = 0; p < s.polygons.size(); ++p)
        for (std::size_t e = 0; e < s.polygons[p].size(); ++e) {
            const Vec2 v = s.edge_vector({p, e});
            if (!is_integer(v.x) || !is_integer(v.y)) return false;
        }
    return true;
}

Surface normalize_orientation(Surface s) {
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        Polygon& poly = s.polygons[p];
        if (poly.size() < 3 || signed_area2(poly) >= 0) continue;
        const std::size_t n = poly.size();
        std::reverse(poly.begin(), poly.end());
        // Old edge e (v[e] -> v[e+1]) becomes new edge n-2-e, traversed backwards.
        auto remap = [n](std::size_t e) { return (2 * n - 2 - e) % n; };
        if (p < s.pairing.size() && s.pairing[p].size() == n) {
            std::vector<EdgeRef> row(n);
            for (std::size_t e = 0; e < n; ++e) row[remap(e)] = s.pairing[p][e];
            s.pairing[p] = std::move(row);
        }
        for (auto& r : s.pairing)
            for (auto& ref : r)
                if (ref.polygon == p && ref.edge < n) ref.edge = remap(ref.edge);
    }
    return s;
}

Surface polygon_surface(Polygon vertices, std::span<const std::pair<std::size_t, std::size_t>> pairs) {
    Surface s;
    const std::size_t n = vertices.size();
    s.polygons.push_back(std::move(vertices));
    s.pairing.assign(1, std::vector<EdgeRef>(n));
    for (std::size_t e = 0; e < n; ++e) s.pairing[0][e] = {0, e};
    for (auto [a, b] : pairs) {
        if (a >= n || b >= n) throw std::invalid_argument("polygon_surface: edge index out of range");
        s.pairing[0][a] = {0, b};
        s.pairing[0][b] = {0, a};
    }
    return normalize_orientation(std::move(s));
}

Surface centrally_symmetric_surface(std::span<const Vec2> sides) {
    const std::size_t n = sides.size();
    Polygon poly;
    Vec2 at{0, 0};
    for (std::size_t i = 0; i < 2 * n; ++i) {
        poly.push_back(at);
        at = at + (i < n ? sides[i] : -sides[i - n]);
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) pairs.emplace_back(i, i + n);
    return polygon_surface(std::move(poly), pairs);
}

Surface translate_polygon(Surface s, std::size_t polygon, const Vec2& offset) {
    for (auto& v : s.polygons.at(polygon)) v = v + offset;
    return s;
}

Surface cut_along_diagonal(const Surface& s, std::size_t polygon, std::size_t i, std::size_t j) {
    const Polygon& poly = s.polygons.at(polygon);
    const std::size_t n = poly.size();
    if (i > j) std::swap(i, j);
    if (j >= n || j - i < 2 || (i == 0 && j == n - 1)) throw std::invalid_argument("cut_along_diagonal: not a diagonal");

    // Piece A: vertices i..j, closing edge j -> i. Piece B: vertices j..n-1,0..i, closing edge i -> j.
    Polygon a(poly.begin() + i, poly.begin() + j + 1);
    Polygon b;
    for (std::size_t k = j; k != i; k = (k + 1) % n) b.push_back(poly[k]);
    b.push_back(poly[i]);

    const std::size_t pa = polygon;
    const std::size_t pb = s.polygons.size();
    // Old edge index -> new location.
    std::vector<EdgeRef> where(n);
    for (std::size_t e = i; e < j; ++e) where[e] = {pa, e - i};
    for (std::size_t e = j, k = 0; e != i; e = (e + 1) % n, ++k) where[e] = {pb, k};

    Surface out = s;
    out.polygons[pa] = std::move(a);
    out.polygons.push_back(std::move(b));
    out.pairing.push_back({});
    out.pairing[pa].assign(out.polygons[pa].size(), {});
    out.pairing[pb].assign(out.polygons[pb].size(), {});

    auto relocate = [&](const EdgeRef& r) { return r.polygon == polygon ? where[r.edge] : r; };
    for (std::size_t p = 0; p < s.polygons.size(); ++p) {
        if (p == polygon) continue;
        for (auto& r : out.pairing[p]) r = relocate(r);
    }
    for (std::size_t e = 0; e < n; ++e) {
        const EdgeRef to = where[e];
        out.pairing[to.polygon][to.edge] = relocate(s.pairing[polygon][e]);
    }
    const EdgeRef closing_a{pa, out.polygons[pa].size() - 1};
    const EdgeRef closing_b{pb, out.polygons[pb].size() - 1};
    out.pairing[pa][closing_a.edge] = closing_b;
    out.pairing[pb][closing_b.edge] = closing_a;
    return out;
}

Surface collapse_edge_pair(const Surface& s, std::size_t edge) {
    if (s.polygons.size() != 1) throw std::invalid_argument("collapse_edge_pair: expects a one-polygon surface");
    const std::size_t n = s.polygons[0].size();
    const std::size_t other = s.partner({0, edge}).edge;
    std::vector<std::size_t> kept;
    for (std::size_t e = 0; e < n; ++e)
        if (e != edge && e != other) kept.push_back(e);

    Polygon poly;
    Vec2 at = s.polygons[0][0];
    std::vector<std::size_t> renumber(n, 0);
    for (std::size_t k = 0; k < kept.size(); ++k) {
        poly.push_back(at);
        at = at + s.edge_vector({0, kept[k]});
        renumber[kept[k]] = k;
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t e : kept) {
        const std::size_t q = s.partner({0, e}).edge;
        if (e < q) pairs.emplace_back(renumber[e], renumber[q]);
    }
    return polygon_surface(std::move(poly), pairs);
}

}  // namespace flatsurf
