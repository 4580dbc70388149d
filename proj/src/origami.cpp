#include "flatsurf/origami.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>

namespace flatsurf {

bool is_transitive(const Permutation& h, const Permutation& v) {
    const std::size_t d = h.size();
    if (d == 0 || v.size() != d) return false;
    std::vector<bool> seen(d, false);
    std::vector<std::uint32_t> stack{0};
    seen[0] = true;
    std::size_t count = 1;
    while (!stack.empty()) {
        const std::uint32_t s = stack.back();
        stack.pop_back();
        for (std::uint32_t t : {h(s), v(s)}) {
            if (!seen[t]) {
                seen[t] = true;
                ++count;
                stack.push_back(t);
            }
        }
    }
    return count == d;
}

Origami make_origami(Permutation h, Permutation v) {
    if (h.size() == 0 || h.size() != v.size()) throw OrigamiError("h and v must be permutations of the same positive degree");
    if (!is_transitive(h, v)) throw OrigamiError("not connected");
    return Origami{std::move(h), std::move(v)};
}

Origami make_origami(std::size_t d, std::string_view h, std::string_view v) {
    return make_origami(Permutation::from_cycles(d, h), Permutation::from_cycles(d, v));
}

Surface to_polygons(const Origami& o) {
    const std::size_t d = o.degree();
    Surface s;
    s.polygons.resize(d);
    s.pairing.assign(d, std::vector<EdgeRef>(4));

    int row = 0;
    for (const auto& cycle : o.h.cycles()) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
            const Rational x = static_cast<long>(k);
            const Rational y = 2 * row;
            s.polygons[cycle[k]] = {{x, y}, {x + 1, y}, {x + 1, y + 1}, {x, y + 1}};
        }
        ++row;
    }
    // Edges: 0 bottom, 1 right, 2 top, 3 left.
    for (std::uint32_t q = 0; q < d; ++q) {
        s.pairing[q][1] = {o.h(q), 3};
        s.pairing[o.h(q)][3] = {q, 1};
        s.pairing[q][2] = {o.v(q), 0};
        s.pairing[o.v(q)][0] = {q, 2};
    }
    return s;
}

Permutation corner_permutation(const Origami& o) { return o.h * o.v * o.h.inverse() * o.v.inverse(); }

namespace {

StratumSignature signature_from_cycle_type(const std::vector<int>& cycle_type) {
    StratumSignature sig;
    int total = 0;
    for (int len : cycle_type) {
        total += len - 1;
        if (len > 1) sig.orders.push_back(len - 1);
    }
    sig.genus = total / 2 + 1;
    return sig;
}

}  // namespace

StratumSignature commutator_signature(const Origami& o) {
    return signature_from_cycle_type(corner_permutation(o).cycle_type());
}

StratumSignature singularity_orders(const Origami& o) {
    StratumSignature fast = commutator_signature(o);
    StratumSignature oracle = stratum(to_polygons(o));
    if (!(fast == oracle))
        throw std::logic_error("corner permutation gives " + fast.to_string() + " but the vertex chase gives " +
                               oracle.to_string());
    return fast;
}

CornerMap corner_map(const Origami& o) {
    CornerMap map;
    map.cones = singularities(to_polygons(o));
    map.cone_of.assign(o.degree(), {0, 0, 0, 0});
    for (std::size_t i = 0; i < map.cones.size(); ++i)
        for (const Corner& c : map.cones[i].corners) map.cone_of[c.polygon][c.vertex] = i;
    return map;
}

namespace {

// Breadth-first relabeling from `start`, emitted as h' followed by v'.
void relabel_code(const std::vector<std::uint32_t>& h, const std::vector<std::uint32_t>& hi,
                  const std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& vi, std::uint32_t start,
                  std::vector<std::uint32_t>& label, std::vector<std::uint32_t>& order, std::vector<std::uint32_t>& code) {
    const std::size_t d = h.size();
    constexpr std::uint32_t unset = ~0u;
    std::fill(label.begin(), label.end(), unset);
    order.clear();
    label[start] = 0;
    order.push_back(start);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const std::uint32_t s = order[head];
        for (std::uint32_t t : {h[s], hi[s], v[s], vi[s]}) {
            if (label[t] == unset) {
                label[t] = static_cast<std::uint32_t>(order.size());
                order.push_back(t);
            }
        }
    }
    code.resize(2 * d);
    for (std::size_t s = 0; s < d; ++s) {
        code[label[s]] = label[h[s]];
        code[d + label[s]] = label[v[s]];
    }
}

}  // namespace

CanonicalForm canonical_form(const Origami& o) {
    const std::size_t d = o.degree();
    const auto& h = o.h.images();
    const auto& v = o.v.images();
    const auto hi = o.h.inverse().images();
    const auto vi = o.v.inverse().images();
    std::vector<std::uint32_t> label(d), order, code, best;
    for (std::uint32_t start = 0; start < d; ++start) {
        relabel_code(h, hi, v, vi, start, label, order, code);
        if (best.empty() || code < best) best = code;
    }
    return CanonicalForm{std::move(best)};
}

bool is_isomorphic(const Origami& a, const Origami& b) {
    return a.degree() == b.degree() && canonical_form(a) == canonical_form(b);
}

Origami from_canonical(const CanonicalForm& c) {
    const std::size_t d = c.degree();
    std::vector<std::uint32_t> h(c.code.begin(), c.code.begin() + static_cast<std::ptrdiff_t>(d));
    std::vector<std::uint32_t> v(c.code.begin() + static_cast<std::ptrdiff_t>(d), c.code.end());
    return Origami{Permutation(std::move(h)), Permutation(std::move(v))};
}

Origami act_T(const Origami& o) { return Origami{o.h, o.v * o.h.inverse()}; }
Origami act_T_inverse(const Origami& o) { return Origami{o.h, o.v * o.h}; }
Origami act_S(const Origami& o) { return Origami{o.v, o.h.inverse()}; }

OrbitData orbit(const Origami& o, std::size_t max_elements) {
    if (max_elements == 0) throw std::invalid_argument("orbit: budget must be at least 1");
    std::map<CanonicalForm, std::size_t> index;
    std::vector<CanonicalForm> found;
    std::vector<std::array<std::size_t, 3>> succ;  // S, T, T^-1

    auto intern = [&](CanonicalForm c) {
        auto [it, inserted] = index.emplace(std::move(c), found.size());
        if (inserted) {
            if (found.size() == max_elements)
                throw BudgetExceeded("orbit: budget of " + std::to_string(max_elements) + " elements exceeded");
            found.push_back(it->first);
            succ.push_back({0, 0, 0});
        }
        return it->second;
    };

    intern(canonical_form(o));
    for (std::size_t head = 0; head < found.size(); ++head) {
        const Origami x = from_canonical(found[head]);
        const std::size_t s = intern(canonical_form(act_S(x)));
        const std::size_t t = intern(canonical_form(act_T(x)));
        const std::size_t ti = intern(canonical_form(act_T_inverse(x)));
        succ[head] = {s, t, ti};
    }

    // Re-index in sorted order: std::map iteration is sorted.
    std::vector<std::size_t> rank(found.size());
    OrbitData data;
    for (const auto& [form, i] : index) {
        rank[i] = data.elements.size();
        data.elements.push_back(form);
    }
    std::vector<std::size_t> t_next(found.size());
    for (std::size_t i = 0; i < found.size(); ++i) {
        data.edges.push_back({rank[i], 'S', rank[succ[i][0]]});
        data.edges.push_back({rank[i], 'T', rank[succ[i][1]]});
        data.edges.push_back({rank[i], 't', rank[succ[i][2]]});
        t_next[rank[i]] = rank[succ[i][1]];
    }
    std::sort(data.edges.begin(), data.edges.end(), [](const OrbitEdge& a, const OrbitEdge& b) {
        return std::tie(a.from, a.generator) < std::tie(b.from, b.generator);
    });

    std::vector<bool> seen(found.size(), false);
    for (std::size_t i = 0; i < found.size(); ++i) {
        if (seen[i]) continue;
        std::size_t width = 0;
        for (std::size_t j = i; !seen[j]; j = t_next[j]) {
            seen[j] = true;
            ++width;
        }
        data.cusp_widths.push_back(width);
    }
    std::sort(data.cusp_widths.rbegin(), data.cusp_widths.rend());
    return data;
}

std::vector<Cylinder> cylinders(const Origami& o) {
    const CornerMap map = corner_map(o);
    const auto rows = o.h.cycles();
    std::vector<std::size_t> row_of(o.degree());
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (auto s : rows[r]) row_of[s] = r;

    std::vector<std::size_t> parent(rows.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    for (std::size_t r = 0; r < rows.size(); ++r) {
        bool singular = false;
        for (auto s : rows[r])
            for (std::size_t corner : {2u, 3u})
                if (map.cones[map.cone_of[s][corner]].angle_turns > 1) singular = true;
        if (!singular) parent[find(r)] = find(row_of[o.v(rows[r].front())]);
    }

    std::map<std::size_t, Cylinder> by_root;
    for (std::size_t r = 0; r < rows.size(); ++r) {
        Cylinder& c = by_root[find(r)];
        const int w = static_cast<int>(rows[r].size());
        if (c.height > 0 && c.width != w) throw std::logic_error("cylinders: merged rows of different length");
        c.width = w;
        ++c.height;
    }
    std::vector<Cylinder> out;
    for (const auto& [root, c] : by_root) out.push_back(c);
    std::sort(out.begin(), out.end(), [](const Cylinder& a, const Cylinder& b) {
        return std::tie(a.width, a.height) > std::tie(b.width, b.height);
    });
    return out;
}

namespace {

void integer_partitions(int n, int max_part, std::vector<int>& current, std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(current);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        current.push_back(k);
        integer_partitions(n - k, k, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Origami> enumerate_origamis(std::size_t d, std::optional<StratumSignature> target) {
    if (d == 0 || d > 16) throw std::invalid_argument("enumerate_origamis: degree must be in 1..16");
    const int n = static_cast<int>(d);

    std::vector<std::vector<int>> shapes;
    std::vector<int> scratch;
    integer_partitions(n, n, scratch, shapes);

    std::vector<int> wanted_lengths;  // commutator cycle lengths > 1, descending
    int wanted_fixed = 0;
    if (target) {
        for (int m : target->orders) wanted_lengths.push_back(m + 1);
        int moved = 0;
        for (int l : wanted_lengths) moved += l;
        wanted_fixed = n - moved;
        if (wanted_fixed < 0) return {};
        int total = 0;
        for (int m : target->orders) total += m;
        if (total != 2 * target->genus - 2) return {};
    }

    std::set<CanonicalForm> seen;
    std::array<std::uint32_t, 16> h{}, hi{}, v{}, vi{}, c{};
    std::vector<int> lengths;
    lengths.reserve(16);

    for (const auto& shape : shapes) {
        // h is the standard representative of its cycle type.
        std::uint32_t at = 0;
        for (int len : shape) {
            for (int k = 0; k < len; ++k) h[at + k] = at + static_cast<std::uint32_t>((k + 1) % len);
            at += static_cast<std::uint32_t>(len);
        }
        for (std::uint32_t s = 0; s < d; ++s) hi[h[s]] = s;

        std::array<std::uint32_t, 16> perm{};
        for (std::uint32_t s = 0; s < d; ++s) perm[s] = s;
        do {
            for (std::uint32_t s = 0; s < d; ++s) {
                v[s] = perm[s];
                vi[perm[s]] = s;
            }
            if (target) {
                for (std::uint32_t s = 0; s < d; ++s) c[s] = h[v[hi[vi[s]]]];
                std::uint32_t seen_mask = 0;
                lengths.clear();
                int fixed = 0;
                for (std::uint32_t s = 0; s < d; ++s) {
                    if (seen_mask >> s & 1u) continue;
                    int len = 0;
                    for (std::uint32_t t = s; !(seen_mask >> t & 1u); t = c[t]) {
                        seen_mask |= 1u << t;
                        ++len;
                    }
                    if (len == 1)
                        ++fixed;
                    else
                        lengths.push_back(len);
                }
                if (fixed != wanted_fixed || lengths.size() != wanted_lengths.size()) continue;
                std::sort(lengths.rbegin(), lengths.rend());
                if (lengths != wanted_lengths) continue;
            }
            Permutation hp(std::vector<std::uint32_t>(h.begin(), h.begin() + n));
            Permutation vp(std::vector<std::uint32_t>(v.begin(), v.begin() + n));
            if (!is_transitive(hp, vp)) continue;
            seen.insert(canonical_form(Origami{std::move(hp), std::move(vp)}));
        } while (std::next_permutation(perm.begin(), perm.begin() + n));
    }

    std::vector<Origami> out;
    out.reserve(seen.size());
    for (const auto& form : seen) out.push_back(from_canonical(form));
    return out;
}

void verify_conventions() {
    const std::vector<Origami> probes = {
        make_origami(1, "()", "()"),
        make_origami(5, "(1,2,3,4)", "(1,5)"),
        make_origami(3, "(1,2)", "(1,3)"),
        make_origami(6, "(1,2,3,4,5,6)", "(1,4)"),
        make_origami(4, "(1,2)(3,4)", "(1,3)(2,4)"),
    };
    for (const auto& o : probes) {
        singularity_orders(o);
        if (!(corner_permutation(act_T(o)) == corner_permutation(o)))
            throw std::logic_error("convention check: T does not preserve the corner permutation");
        const Origami s4 = act_S(act_S(act_S(act_S(o))));
        if (!(s4.h == o.h && s4.v == o.v)) throw std::logic_error("convention check: S^4 is not the identity");
        if (!(commutator_signature(act_S(o)) == commutator_signature(o)))
            throw std::logic_error("convention check: S changes the stratum");
    }
}

}  // namespace flatsurf
