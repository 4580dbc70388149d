#include "flatsurf/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace flatsurf {

Permutation::Permutation(std::vector<std::uint32_t> images) : images_(std::move(images)) {
    std::vector<bool> hit(images_.size(), false);
    for (auto x : images_) {
        if (x >= images_.size() || hit[x]) throw std::invalid_argument("not a permutation");
        hit[x] = true;
    }
}

Permutation Permutation::identity(std::size_t n) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(img));
}

CycleSyntaxError::CycleSyntaxError(std::size_t column, const std::string& reason, std::string_view text)
    : std::invalid_argument(reason + " at column " + std::to_string(column) + " of '" + std::string(text) + "'"),
      column_(column),
      reason_(reason) {}

Permutation Permutation::from_cycles(std::size_t n, std::string_view text) {
    std::vector<std::uint32_t> img(n);
    for (std::size_t i = 0; i < n; ++i) img[i] = static_cast<std::uint32_t>(i);
    std::vector<bool> used(n, false);

    std::size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto fail = [&](const std::string& what) {
        throw CycleSyntaxError(pos + 1, what, text);
    };

    skip_space();
    while (pos < text.size()) {
        if (text[pos] != '(') fail("expected '('");
        ++pos;
        std::vector<std::uint32_t> cycle;
        for (;;) {
            skip_space();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            if (pos < text.size() && text[pos] == ',') {
                if (cycle.empty()) fail("unexpected ','");
                ++pos;
                skip_space();
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) fail("expected a label");
            std::size_t label = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                label = label * 10 + static_cast<std::size_t>(text[pos] - '0');
                if (label > n) fail("label out of range 1.." + std::to_string(n));
                ++pos;
            }
            if (label == 0) fail("label out of range 1.." + std::to_string(n));
            if (used[label - 1]) fail("label " + std::to_string(label) + " repeated");
            used[label - 1] = true;
            cycle.push_back(static_cast<std::uint32_t>(label - 1));
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) img[cycle[i]] = cycle[(i + 1) % cycle.size()];
        skip_space();
    }
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<std::uint32_t> inv(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) inv[images_[i]] = static_cast<std::uint32_t>(i);
    return Permutation(std::move(inv));
}

std::vector<std::vector<std::uint32_t>> Permutation::cycles() const {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::uint32_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::vector<std::uint32_t> c;
        for (std::uint32_t j = i; !seen[j]; j = images_[j]) {
            seen[j] = true;
            c.push_back(j);
        }
        out.push_back(std::move(c));
    }
    return out;
}

std::vector<int> Permutation::cycle_type() const {
    std::vector<int> t;
    for (const auto& c : cycles()) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
}

bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i)
        if (images_[i] != i) return false;
    return true;
}

std::string Permutation::to_cycle_string() const {
    std::string s;
    for (const auto& c : cycles()) {
        if (c.size() < 2) continue;
        s += '(';
        for (std::size_t i = 0; i < c.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(c[i] + 1);
        }
        s += ')';
    }
    return s.empty() ? "()" : s;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
    if (a.size() != b.size()) throw std::invalid_argument("composing permutations of different degree");
    std::vector<std::uint32_t> img(a.size());
    for (std::uint32_t i = 0; i < a.size(); ++i) img[i] = a(b(i));
    return Permutation(std::move(img));
}

Permutation conjugate(const Permutation& p, const Permutation& sigma) { return sigma * p * sigma.inverse(); }

}  // namespace flatsurf
