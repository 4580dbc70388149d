#pragma once

// Slow, independent reference computations used to check the library.

#include "flatsurf/origami.hpp"
#include "flatsurf/spin.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>

namespace oracles {

using flatsurf::Direction;
using flatsurf::Origami;
using flatsurf::SimpleCycle;

/// Primal edges of the unit-square complex: 2*s is the bottom edge of s, 2*s+1 its left edge.
inline std::uint32_t bottom(std::uint32_t s) { return 2 * s; }
inline std::uint32_t left(std::uint32_t s) { return 2 * s + 1; }

/// Intersection parity of two center-graph cycles: push the second one onto the
/// square edges through the lower-left corners and count the edges the first one crosses.
inline bool pushoff_pairing(const Origami& o, const SimpleCycle& a, const SimpleCycle& b) {
    const auto hi = o.h.inverse();
    const auto vi = o.v.inverse();
    std::vector<int> primal(2 * o.degree(), 0);
    for (const auto& st : b.steps) {
        switch (st.dir) {
            case Direction::E: primal[bottom(st.square)] ^= 1; break;
            case Direction::N: primal[left(st.square)] ^= 1; break;
            case Direction::W: primal[bottom(hi(st.square))] ^= 1; break;
            case Direction::S: primal[left(vi(st.square))] ^= 1; break;
        }
    }
    int parity = 0;
    for (const auto& st : a.steps) {
        switch (st.dir) {
            case Direction::E: parity ^= primal[left(o.h(st.square))]; break;
            case Direction::W: parity ^= primal[left(st.square)]; break;
            case Direction::N: parity ^= primal[bottom(o.v(st.square))]; break;
            case Direction::S: parity ^= primal[bottom(st.square)]; break;
        }
    }
    return parity != 0;
}

/// Number of sigma commuting with h and v, found by extending sigma(0) = t.
inline std::size_t automorphism_count(const Origami& o) {
    const std::size_t d = o.degree();
    std::size_t count = 0;
    for (std::uint32_t t = 0; t < d; ++t) {
        std::vector<std::int64_t> sigma(d, -1);
        sigma[0] = t;
        std::vector<std::uint32_t> stack = {0};
        bool ok = true;
        while (ok && !stack.empty()) {
            const std::uint32_t s = stack.back();
            stack.pop_back();
            const std::uint32_t img = static_cast<std::uint32_t>(sigma[s]);
            const std::pair<std::uint32_t, std::uint32_t> moves[] = {{o.h(s), o.h(img)}, {o.v(s), o.v(img)}};
            for (auto [a, b] : moves) {
                if (sigma[a] < 0) {
                    sigma[a] = b;
                    stack.push_back(a);
                } else if (sigma[a] != b) {
                    ok = false;
                }
            }
        }
        if (ok) {
            std::vector<std::int64_t> sorted = sigma;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < d; ++i) ok = ok && sorted[i] == static_cast<std::int64_t>(i);
        }
        count += ok;
    }
    return count;
}

/// Zero orders of hvh^-1v^-1 for a labeled pair, written out as a plain loop.
inline std::vector<int> commutator_orders(const std::vector<std::uint32_t>& h, const std::vector<std::uint32_t>& v) {
    const std::size_t d = h.size();
    std::vector<std::uint32_t> hi(d), vi(d);
    for (std::size_t i = 0; i < d; ++i) {
        hi[h[i]] = static_cast<std::uint32_t>(i);
        vi[v[i]] = static_cast<std::uint32_t>(i);
    }
    std::vector<bool> seen(d, false);
    std::vector<int> orders;
    for (std::size_t s = 0; s < d; ++s) {
        if (seen[s]) continue;
        int len = 0;
        for (std::size_t x = s; !seen[x]; x = h[v[hi[vi[x]]]]) {
            seen[x] = true;
            ++len;
        }
        if (len > 1) orders.push_back(len - 1);
    }
    std::sort(orders.rbegin(), orders.rend());
    return orders;
}

inline bool transitive(const std::vector<std::uint32_t>& h, const std::vector<std::uint32_t>& v) {
    std::vector<bool> seen(h.size(), false);
    std::vector<std::uint32_t> stack = {0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        const auto s = stack.back();
        stack.pop_back();
        for (auto n : {h[s], v[s]})
            if (!seen[n]) {
                seen[n] = true;
                ++reached;
                stack.push_back(n);
            }
    }
    return reached == h.size();
}

/// Labeled (h, v) pairs of degree d, connected, with the given zero orders.
inline std::size_t labeled_count(std::size_t d, const std::vector<int>& orders) {
    std::vector<std::uint32_t> h(d), v(d);
    std::iota(h.begin(), h.end(), 0u);
    std::size_t count = 0;
    do {
        std::iota(v.begin(), v.end(), 0u);
        do {
            if (commutator_orders(h, v) == orders && transitive(h, v)) ++count;
        } while (std::next_permutation(v.begin(), v.end()));
    } while (std::next_permutation(h.begin(), h.end()));
    return count;
}

/// dim L(kW) for the Weierstrass point W over a branch value on a genus-g curve,
/// counting the functions x^e (z - a)^-j (e in {0, 1}) with no pole away from W.
/// Their pole orders at W (2j - e) are pairwise distinct, so they are independent.
inline int riemann_roch_h0(int k, int g) {
    int count = 0;
    for (int e = 0; e <= 1; ++e)
        for (int j = 0; j <= 2 * g + 2; ++j) {
            const int order_w = e - 2 * j;           // x vanishes simply at W, z - a doubly
            const int order_inf = j - (g + 1) * e;   // at each point over infinity
            if (order_w >= -k && order_inf >= 0) ++count;
        }
    return count;
}

}  // namespace oracles
