#pragma once

#include <set>
#include <string>
#include <vector>

namespace flatsurf {

/// Positive zero orders sorted descending; the empty partition is the torus stratum.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument for non-positive entries or an odd sum.
    explicit Partition(std::vector<int> orders);

    const std::vector<int>& orders() const { return orders_; }
    int genus() const;
    std::size_t size() const { return orders_.size(); }
    bool all_even() const;
    std::string to_string() const;  // "(2,1,1)"

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> orders_;
};

enum class ComponentLabel { Hyperelliptic, OddSpin, EvenSpin, NonHyperelliptic, Connected };

std::string to_string(ComponentLabel label);

/// Positive partitions of 2g-2, descending lexicographic order: (2g-2) first, (1,...,1) last.
std::vector<Partition> partitions(int g);

/// 2g + n - 1.
int dimension(const Partition& mu);
/// 4g - 3.
int hodge_dimension(int g);
/// 2g - 1.
int hyp_locus_dimension(int g);

std::set<ComponentLabel> components(const Partition& mu);

/// Partitions obtained by merging two zeros. Throws std::invalid_argument("nothing to merge") when n < 2.
std::vector<Partition> merge_adjacent(const Partition& mu);

}  // namespace flatsurf
