#include "flatsurf/spin.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace flatsurf {

char to_char(Direction d) {
    switch (d) {
        case Direction::E: return 'E';
        case Direction::N: return 'N';
        case Direction::W: return 'W';
        case Direction::S: return 'S';
    }
    return '?';
}

std::uint32_t move(const Origami& o, std::uint32_t s, Direction dir) {
    switch (dir) {
        case Direction::E: return o.h(s);
        case Direction::N: return o.v(s);
        case Direction::W: return o.h.inverse()(s);
        case Direction::S: return o.v.inverse()(s);
    }
    return s;
}

namespace {

constexpr std::array<Direction, 4> kDirections = {Direction::E, Direction::N, Direction::W, Direction::S};

struct Neighbors {
    std::vector<std::uint32_t> h, v, hi, vi;

    explicit Neighbors(const Origami& o)
        : h(o.h.images()), v(o.v.images()), hi(o.h.inverse().images()), vi(o.v.inverse().images()) {}

    std::uint32_t move(std::uint32_t s, Direction d) const {
        switch (d) {
            case Direction::E: return h[s];
            case Direction::N: return v[s];
            case Direction::W: return hi[s];
            case Direction::S: return vi[s];
        }
        return s;
    }
    std::uint32_t edge(std::uint32_t s, Direction d) const {
        switch (d) {
            case Direction::E: return 2 * s;
            case Direction::N: return 2 * s + 1;
            case Direction::W: return 2 * hi[s];
            case Direction::S: return 2 * vi[s] + 1;
        }
        return 0;
    }
};

struct Tree {
    std::uint32_t root = 0;
    std::vector<Step> parent_step;  // step from the parent into each node
    std::vector<int> depth;
    std::vector<bool> tree_edge;
};

CycleBasis basis_from_tree(const Neighbors& nb, const Tree& tree) {
    const std::size_t d = nb.h.size();
    CycleBasis basis;
    auto path_up = [&](std::uint32_t from, int to_depth) {
        // Steps walking from `from` up to the ancestor at depth to_depth.
        std::vector<Step> steps;
        while (tree.depth[from] > to_depth) {
            const Step in = tree.parent_step[from];
            steps.push_back({from, opposite(in.dir)});
            from = in.square;
        }
        return std::pair{steps, from};
    };

    for (std::uint32_t s = 0; s < d; ++s) {
        for (Direction dir : {Direction::E, Direction::N}) {
            const std::uint32_t e = nb.edge(s, dir);
            if (tree.tree_edge[e]) continue;
            const std::uint32_t t = nb.move(s, dir);
            SimpleCycle c;
            c.steps.push_back({s, dir});
            if (t != s) {
                // Walk t and s up to their lowest common ancestor.
                std::uint32_t a = t, b = s;
                std::vector<Step> up_a, up_b;
                const int common = std::min(tree.depth[a], tree.depth[b]);
                auto [sa, na] = path_up(a, common);
                auto [sb, nb2] = path_up(b, common);
                up_a = std::move(sa);
                up_b = std::move(sb);
                a = na;
                b = nb2;
                while (a != b) {
                    const Step ia = tree.parent_step[a];
                    up_a.push_back({a, opposite(ia.dir)});
                    a = ia.square;
                    const Step ib = tree.parent_step[b];
                    up_b.push_back({b, opposite(ib.dir)});
                    b = ib.square;
                }
                // t -> lca, then lca -> s by reversing s's upward walk.
                for (const Step& st : up_a) c.steps.push_back(st);
                for (auto it = up_b.rbegin(); it != up_b.rend(); ++it) {
                    const std::uint32_t parent = nb.move(it->square, it->dir);
                    c.steps.push_back({parent, opposite(it->dir)});
                }
            }
            basis.cycles.push_back(std::move(c));
            basis.cotree_edges.push_back(e);
        }
    }
    return basis;
}

Tree empty_tree(std::size_t d, std::uint32_t root) {
    Tree t;
    t.root = root;
    t.parent_step.assign(d, {});
    t.depth.assign(d, -1);
    t.tree_edge.assign(2 * d, false);
    t.depth[root] = 0;
    return t;
}

}  // namespace

std::uint32_t edge_id(const Origami& o, Step step) {
    switch (step.dir) {
        case Direction::E: return 2 * step.square;
        case Direction::N: return 2 * step.square + 1;
        case Direction::W: return 2 * o.h.inverse()(step.square);
        case Direction::S: return 2 * o.v.inverse()(step.square) + 1;
    }
    return 0;
}

void check_cycle(const Origami& o, const SimpleCycle& c) {
    if (c.steps.empty()) throw std::invalid_argument("cycle has no steps");
    const Neighbors nb(o);
    std::set<std::uint32_t> visited;
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        const Step& st = c.steps[i];
        const Step& next = c.steps[(i + 1) % c.steps.size()];
        if (st.square >= o.degree()) throw std::invalid_argument("cycle leaves the origami");
        if (nb.move(st.square, st.dir) != next.square) throw std::invalid_argument("cycle is not closed");
        if (!visited.insert(st.square).second) throw std::invalid_argument("cycle is not vertex-simple");
        if (c.steps.size() > 1 && nb.edge(st.square, st.dir) == nb.edge(next.square, next.dir) && next.dir == opposite(st.dir))
            throw std::invalid_argument("cycle backtracks");
    }
}

BitVec CycleBasis::coordinates(const Origami& o, const SimpleCycle& c) const {
    std::vector<bool> used(2 * o.degree(), false);
    for (const Step& st : c.steps) used[edge_id(o, st)] = !used[edge_id(o, st)];
    BitVec x(cycles.size());
    for (std::size_t i = 0; i < cotree_edges.size(); ++i)
        if (used[cotree_edges[i]]) x.set(i);
    return x;
}

CycleBasis fundamental_cycles(const Origami& o) {
    const Neighbors nb(o);
    const std::size_t d = o.degree();
    Tree tree = empty_tree(d, 0);
    std::vector<std::uint32_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::uint32_t s = queue[head];
        for (Direction dir : kDirections) {
            const std::uint32_t t = nb.move(s, dir);
            if (tree.depth[t] >= 0) continue;
            tree.depth[t] = tree.depth[s] + 1;
            tree.parent_step[t] = {s, dir};
            tree.tree_edge[nb.edge(s, dir)] = true;
            queue.push_back(t);
        }
    }
    return basis_from_tree(nb, tree);
}

CycleBasis fundamental_cycles(const Origami& o, std::uint64_t seed) {
    const Neighbors nb(o);
    const std::size_t d = o.degree();
    std::mt19937_64 rng(seed);
    const auto root = static_cast<std::uint32_t>(std::uniform_int_distribution<std::size_t>(0, d - 1)(rng));
    Tree tree = empty_tree(d, root);
    std::vector<Step> frontier;
    for (Direction dir : kDirections) frontier.push_back({root, dir});
    while (!frontier.empty()) {
        const std::size_t pick = std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng);
        const Step st = frontier[pick];
        frontier[pick] = frontier.back();
        frontier.pop_back();
        const std::uint32_t t = nb.move(st.square, st.dir);
        if (tree.depth[t] >= 0) continue;
        tree.depth[t] = tree.depth[st.square] + 1;
        tree.parent_step[t] = st;
        tree.tree_edge[nb.edge(st.square, st.dir)] = true;
        for (Direction dir : kDirections) frontier.push_back({t, dir});
    }
    return basis_from_tree(nb, tree);
}

int turning_index(const SimpleCycle& c) {
    int total = 0;
    const std::size_t k = c.steps.size();
    for (std::size_t i = 0; i < k; ++i) {
        const int a = static_cast<int>(c.steps[i].dir);
        const int b = static_cast<int>(c.steps[(i + 1) % k].dir);
        switch ((b - a + 4) % 4) {
            case 1: ++total; break;
            case 3: --total; break;
            case 2: throw std::logic_error("turning_index: cycle reverses direction");
            default: break;
        }
    }
    if (total % 4 != 0) throw std::logic_error("turning_index: quarter turns not divisible by 4");
    return total / 4;
}

namespace {

struct Chords {
    // Per square: sides (0..3 in E, N, W, S order) the cycle uses, or -1.
    std::vector<int> in, out;
    std::set<std::uint32_t> edges;
};

Chords chords_of(const Neighbors& nb, const SimpleCycle& c, std::size_t d) {
    Chords ch;
    ch.in.assign(d, -1);
    ch.out.assign(d, -1);
    const std::size_t k = c.steps.size();
    for (std::size_t i = 0; i < k; ++i) {
        const Step& st = c.steps[i];
        const Step& prev = c.steps[(i + k - 1) % k];
        ch.out[st.square] = static_cast<int>(st.dir);
        ch.in[st.square] = static_cast<int>(opposite(prev.dir));
        ch.edges.insert(nb.edge(st.square, st.dir));
    }
    return ch;
}

// Sides counterclockwise from `from`: does a come before b?
bool first_of(int from, int a, int b) { return (a - from + 4) % 4 < (b - from + 4) % 4; }

bool interleaved(int a0, int a1, int b0, int b1) {
    // Distinct sides of the square boundary: chords cross iff exactly one endpoint of b lies strictly between a0 and a1.
    auto between = [&](int x) { return first_of(a0, x, a1); };
    return between(b0) != between(b1);
}

}  // namespace

bool pairing_mod2(const Origami& o, const SimpleCycle& a, const SimpleCycle& b) {
    const std::size_t d = o.degree();
    const Neighbors nb(o);
    const Chords ca = chords_of(nb, a, d);
    const Chords cb = chords_of(nb, b, d);
    if (ca.edges == cb.edges) return false;

    auto shared_sides = [&](std::uint32_t s) {
        std::vector<int> out;
        for (int x : {ca.in[s], ca.out[s]})
            if (x == cb.in[s] || x == cb.out[s]) out.push_back(x);
        return out;
    };
    auto other = [](const Chords& c, std::uint32_t s, int side) { return c.in[s] == side ? c.out[s] : c.in[s]; };

    int parity = 0;
    std::vector<bool> endpoint_done(d, false);
    for (std::uint32_t s = 0; s < d; ++s) {
        if (ca.in[s] < 0 || cb.in[s] < 0) continue;
        const auto shared = shared_sides(s);
        if (shared.empty()) {
            if (interleaved(ca.in[s], ca.out[s], cb.in[s], cb.out[s])) parity ^= 1;
            continue;
        }
        if (shared.size() != 1 || endpoint_done[s]) continue;

        // Walk the maximal shared path from this endpoint.
        endpoint_done[s] = true;
        const int p = shared.front();
        const bool start_order = first_of(p, other(ca, s, p), other(cb, s, p));
        std::uint32_t at = s;
        int leave = p;
        for (std::size_t guard = 0;; ++guard) {
            if (guard > d) throw std::logic_error("pairing_mod2: shared path does not terminate");
            const std::uint32_t next = nb.move(at, static_cast<Direction>(leave));
            const int arrive = (leave + 2) % 4;
            const auto here = shared_sides(next);
            if (here.size() == 1) {
                endpoint_done[next] = true;
                const bool end_order = first_of(arrive, other(ca, next, arrive), other(cb, next, arrive));
                if (start_order == end_order) parity ^= 1;
                break;
            }
            at = next;
            leave = other(ca, next, arrive);
        }
    }
    return parity != 0;
}

bool QuadraticFormData::form(const BitVec& x, const BitVec& y) const {
    bool acc = false;
    for (std::size_t i = 0; i < pairing.size(); ++i)
        if (x.get(i) && dot(pairing[i], y)) acc = !acc;
    return acc;
}

bool QuadraticFormData::q(const BitVec& x) const {
    bool acc = false;
    for (std::size_t i = 0; i < q_values.size(); ++i) {
        if (!x.get(i)) continue;
        if (q_values[i]) acc = !acc;
        for (std::size_t j = i + 1; j < q_values.size(); ++j)
            if (x.get(j) && pairing[i].get(j)) acc = !acc;
    }
    return acc;
}

bool QuadraticFormData::arf() const {
    bool acc = false;
    for (const auto& [a, b] : symplectic_basis)
        if (q(a) && q(b)) acc = !acc;
    return acc;
}

QuadraticFormData quadratic_form(const Origami& o, std::vector<SimpleCycle> cycles) {
    QuadraticFormData data;
    const std::size_t k = cycles.size();
    data.pairing.assign(k, BitVec(k));
    for (std::size_t i = 0; i < k; ++i) {
        data.q_values.push_back(((turning_index(cycles[i]) + 1) % 2 + 2) % 2 == 1);
        for (std::size_t j = i + 1; j < k; ++j) {
            const bool x = pairing_mod2(o, cycles[i], cycles[j]);
            data.pairing[i].set(j, x);
            data.pairing[j].set(i, x);
        }
    }
    data.cycles = std::move(cycles);

    // Symplectic Gram-Schmidt over GF(2).
    std::vector<BitVec> pool;
    for (std::size_t i = 0; i < k; ++i) pool.push_back(BitVec::unit(k, i));
    for (;;) {
        std::size_t ia = pool.size(), ib = pool.size();
        for (std::size_t i = 0; i < pool.size() && ia == pool.size(); ++i)
            for (std::size_t j = i + 1; j < pool.size(); ++j)
                if (data.form(pool[i], pool[j])) {
                    ia = i;
                    ib = j;
                    break;
                }
        if (ia == pool.size()) break;
        BitVec a = pool[ia], b = pool[ib];
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(ib));
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(ia));
        for (auto& z : pool) {
            const bool za = data.form(z, a);
            const bool zb = data.form(z, b);
            if (zb) z ^= a;
            if (za) z ^= b;
        }
        data.symplectic_basis.emplace_back(std::move(a), std::move(b));
    }
    data.symplectic_rank = static_cast<int>(2 * data.symplectic_basis.size());
    for (auto& z : pool)
        if (z.any()) data.radical.push_back(z);
    data.radical_rank = static_cast<int>(gf2_rank(data.radical));
    for (const auto& r : data.radical)
        if (data.q(r)) throw SpinError("radical q nonzero");
    return data;
}

namespace {

void require_even(const Origami& o) {
    for (int m : commutator_signature(o).orders)
        if (m % 2 != 0) throw SpinError("spin undefined: odd zero order");
}

}  // namespace

int spin_parity(const Origami& o, const CycleBasis& basis) {
    require_even(o);
    const QuadraticFormData data = quadratic_form(o, basis.cycles);
    const int g = commutator_signature(o).genus;
    if (data.symplectic_rank != 2 * g)
        throw SpinError("symplectic rank " + std::to_string(data.symplectic_rank) + " differs from 2g = " +
                        std::to_string(2 * g));
    return data.arf() ? 1 : 0;
}

int spin_parity(const Origami& o) { return spin_parity(o, fundamental_cycles(o)); }

std::vector<InvolutionWitness> rotation_involutions(const Origami& o) {
    const std::size_t d = o.degree();
    const Neighbors nb(o);
    std::optional<CornerMap> corners;
    std::vector<InvolutionWitness> found;
    constexpr std::uint32_t unset = ~0u;

    for (std::uint32_t target = 0; target < d; ++target) {
        // sigma h = h^-1 sigma and sigma v = v^-1 sigma, so sigma(1) fixes sigma on the orbit of 1.
        std::vector<std::uint32_t> sigma(d, unset);
        sigma[0] = target;
        std::vector<std::uint32_t> queue{0};
        bool ok = true;
        for (std::size_t head = 0; head < queue.size() && ok; ++head) {
            const std::uint32_t s = queue[head];
            for (Direction dir : kDirections) {
                const std::uint32_t t = nb.move(s, dir);
                const std::uint32_t image = nb.move(sigma[s], opposite(dir));
                if (sigma[t] == unset) {
                    sigma[t] = image;
                    queue.push_back(t);
                } else if (sigma[t] != image) {
                    ok = false;
                    break;
                }
            }
        }
        if (!ok) continue;
        std::vector<bool> hit(d, false);
        for (std::uint32_t s = 0; s < d && ok; ++s) {
            if (hit[sigma[s]] || sigma[sigma[s]] != s) ok = false;
            hit[sigma[s]] = true;
        }
        if (!ok) continue;

        if (!corners) corners = corner_map(o);
        InvolutionWitness w;
        for (std::uint32_t s = 0; s < d; ++s) {
            if (sigma[s] == s) ++w.fixed_centers;
            if (sigma[s] == nb.h[s]) ++w.fixed_edge_midpoints;  // right edge of s
            if (sigma[s] == nb.v[s]) ++w.fixed_edge_midpoints;  // top edge of s
        }
        // Rotation by pi takes corner k of s to corner k+2 of sigma(s).
        w.cone_image.assign(corners->cones.size(), unset);
        for (std::uint32_t s = 0; s < d; ++s) {
            for (std::size_t k = 0; k < 4; ++k) {
                const std::size_t from = corners->cone_of[s][k];
                const std::size_t to = corners->cone_of[sigma[s]][(k + 2) % 4];
                if (w.cone_image[from] == unset)
                    w.cone_image[from] = to;
                else if (w.cone_image[from] != to)
                    throw std::logic_error("rotation involution does not act on vertices");
            }
        }
        for (std::size_t i = 0; i < w.cone_image.size(); ++i)
            if (w.cone_image[i] == i) ++w.fixed_vertices;
        w.sigma = Permutation(std::move(sigma));
        found.push_back(std::move(w));
    }
    return found;
}

std::optional<InvolutionWitness> hyperelliptic_involution(const Origami& o) {
    const int g = commutator_signature(o).genus;
    for (auto& w : rotation_involutions(o)) {
        // Riemann-Hurwitz for a double cover: 2 - 2g = 2 (2 - 2g') - F.
        const int twice_chi = 2 - 2 * g + w.fixed_points();
        if (twice_chi % 4 != 0 || twice_chi > 4)
            throw std::logic_error("Riemann-Hurwitz gives a non-integral quotient genus");
        if (w.fixed_points() == 2 * g + 2) return std::move(w);
    }
    return std::nullopt;
}

ComponentLabel classify_component(const Origami& o) {
    using enum ComponentLabel;
    const StratumSignature sig = commutator_signature(o);
    if (sig.genus < 2) return Connected;
    const Partition mu(sig.orders);
    const auto labels = components(mu);
    if (labels.size() == 1) return *labels.begin();

    ComponentLabel label;
    if (labels.contains(Hyperelliptic)) {
        bool hyp = false;
        if (auto w = hyperelliptic_involution(o)) {
            hyp = true;
            if (mu.size() == 2) {
                // H^hyp(g-1, g-1) needs the two zeros exchanged.
                const CornerMap map = corner_map(o);
                for (std::size_t i = 0; i < map.cones.size(); ++i)
                    if (map.cones[i].angle_turns > 1 && w->cone_image[i] == i) hyp = false;
            }
        }
        if (hyp)
            label = Hyperelliptic;
        else if (labels.contains(NonHyperelliptic))
            label = NonHyperelliptic;
        else
            label = spin_parity(o) ? OddSpin : EvenSpin;
    } else {
        label = spin_parity(o) ? OddSpin : EvenSpin;
    }
    if (!labels.contains(label))
        throw std::logic_error("classify_component: " + to_string(label) + " is not a component of H" + mu.to_string());
    return label;
}

}  // namespace flatsurf
