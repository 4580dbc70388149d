#include "flatsurf/strata.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace flatsurf {

Partition::Partition(std::vector<int> orders) : orders_(std::move(orders)) {
    for (int m : orders_)
        if (m <= 0) throw std::invalid_argument("partition entries must be positive");
    if (std::accumulate(orders_.begin(), orders_.end(), 0) % 2 != 0)
        throw std::invalid_argument("partition of an odd number");
    std::sort(orders_.rbegin(), orders_.rend());
}

int Partition::genus() const { return (std::accumulate(orders_.begin(), orders_.end(), 0) + 2) / 2; }

bool Partition::all_even() const {
    return std::all_of(orders_.begin(), orders_.end(), [](int m) { return m % 2 == 0; });
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < orders_.size(); ++i) s += (i ? "," : "") + std::to_string(orders_[i]);
    return s + ")";
}

std::string to_string(ComponentLabel label) {
    switch (label) {
        case ComponentLabel::Hyperelliptic: return "hyp";
        case ComponentLabel::OddSpin: return "odd";
        case ComponentLabel::EvenSpin: return "even";
        case ComponentLabel::NonHyperelliptic: return "nonhyp";
        case ComponentLabel::Connected: return "connected";
    }
    return "?";
}

namespace {

void descend(int remaining, int max_part, std::vector<int>& current, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
        current.push_back(k);
        descend(remaining - k, k, current, out);
        current.pop_back();
    }
}

}  // namespace

std::vector<Partition> partitions(int g) {
    if (g < 2) throw std::invalid_argument("partitions: genus must be at least 2");
    std::vector<Partition> out;
    std::vector<int> current;
    descend(2 * g - 2, 2 * g - 2, current, out);
    return out;
}

int dimension(const Partition& mu) { return 2 * mu.genus() + static_cast<int>(mu.size()) - 1; }
int hodge_dimension(int g) { return 4 * g - 3; }
int hyp_locus_dimension(int g) { return 2 * g - 1; }

std::set<ComponentLabel> components(const Partition& mu) {
    using enum ComponentLabel;
    const int g = mu.genus();
    const auto& o = mu.orders();
    const bool minimal = o.size() == 1 && o[0] == 2 * g - 2;
    const bool twin = o.size() == 2 && o[0] == g - 1 && o[1] == g - 1;
    if (g <= 2) return {Connected};
    if (g == 3) {
        if (minimal || twin) return {Hyperelliptic, OddSpin};
        return {Connected};
    }
    if (minimal) return {Hyperelliptic, OddSpin, EvenSpin};
    if (twin) {
        if (g % 2 == 1) return {Hyperelliptic, OddSpin, EvenSpin};
        return {Hyperelliptic, NonHyperelliptic};
    }
    if (mu.all_even()) return {OddSpin, EvenSpin};
    return {Connected};
}

std::vector<Partition> merge_adjacent(const Partition& mu) {
    const auto& o = mu.orders();
    if (o.size() < 2) throw std::invalid_argument("nothing to merge");
    std::set<Partition> merged;
    for (std::size_t i = 0; i < o.size(); ++i) {
        for (std::size_t j = i + 1; j < o.size(); ++j) {
            std::vector<int> next;
            for (std::size_t k = 0; k < o.size(); ++k)
                if (k != i && k != j) next.push_back(o[k]);
            next.push_back(o[i] + o[j]);
            merged.emplace(std::move(next));
        }
    }
    // Same descending lexicographic order as partitions().
    return {merged.rbegin(), merged.rend()};
}

}  // namespace flatsurf
