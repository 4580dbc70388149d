#include "flatsurf/strata.hpp"

#include <doctest.h>

#include <algorithm>
#include <stdexcept>

using namespace flatsurf;
using L = ComponentLabel;

namespace {

std::vector<std::vector<int>> orders_of(const std::vector<Partition>& ps) {
    std::vector<std::vector<int>> out;
    for (const auto& p : ps) out.push_back(p.orders());
    return out;
}

}  // namespace

TEST_CASE("partition basics") {
    const Partition p({1, 2, 1});
    CHECK(p.orders() == std::vector<int>{2, 1, 1});
    CHECK(p.genus() == 3);
    CHECK(p.to_string() == "(2,1,1)");
    CHECK_FALSE(p.all_even());
    CHECK(Partition({2, 2}).all_even());
    CHECK(Partition().genus() == 1);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({0, 2}), std::invalid_argument);
}

TEST_CASE("partitions") {
    CHECK(orders_of(partitions(2)) == std::vector<std::vector<int>>{{2}, {1, 1}});
    CHECK(orders_of(partitions(3)) == std::vector<std::vector<int>>{{4}, {3, 1}, {2, 2}, {2, 1, 1}, {1, 1, 1, 1}});
    CHECK(partitions(2).size() == 2);
    // integer partitions of 2g - 2 = 4, 6, ..., 14
    const std::size_t counts[] = {0, 0, 2, 5, 11, 22, 42, 77, 135};
    for (int g = 2; g <= 8; ++g) CHECK(partitions(g).size() == counts[g]);
    CHECK_THROWS(partitions(1));
}

TEST_CASE("dimensions") {
    CHECK(dimension(Partition({2})) == 4);
    CHECK(dimension(Partition({1, 1, 1, 1})) == 9);
    CHECK(hodge_dimension(3) == 9);
    CHECK(hyp_locus_dimension(3) == 5);
    for (int g = 2; g <= 8; ++g) {
        CHECK(dimension(Partition({2 * g - 2})) == 2 * g);
        CHECK(dimension(Partition(std::vector<int>(2 * g - 2, 1))) == hodge_dimension(g));
        for (const auto& mu : partitions(g)) {
            CHECK(dimension(mu) == 2 * g + static_cast<int>(mu.size()) - 1);
            if (mu.size() < 2) continue;
            for (const auto& m : merge_adjacent(mu)) CHECK(dimension(m) == dimension(mu) - 1);
        }
    }
}

TEST_CASE("components") {
    CHECK(components(Partition()) == std::set<L>{L::Connected});
    CHECK(components(Partition({2})) == std::set<L>{L::Connected});
    CHECK(components(Partition({1, 1})) == std::set<L>{L::Connected});
    CHECK(components(Partition({4})) == std::set<L>{L::Hyperelliptic, L::OddSpin});
    CHECK(components(Partition({2, 2})) == std::set<L>{L::Hyperelliptic, L::OddSpin});
    CHECK(components(Partition({3, 1})) == std::set<L>{L::Connected});
    CHECK(components(Partition({2, 1, 1})) == std::set<L>{L::Connected});
    CHECK(components(Partition({6})) == std::set<L>{L::Hyperelliptic, L::OddSpin, L::EvenSpin});
    CHECK(components(Partition({3, 3})) == std::set<L>{L::Hyperelliptic, L::NonHyperelliptic});
    CHECK(components(Partition({4, 4})) == std::set<L>{L::Hyperelliptic, L::OddSpin, L::EvenSpin});
    CHECK(components(Partition({4, 2})) == std::set<L>{L::OddSpin, L::EvenSpin});
    CHECK(components(Partition({2, 2, 2})) == std::set<L>{L::OddSpin, L::EvenSpin});
    CHECK(components(Partition({5, 1})) == std::set<L>{L::Connected});
    for (int g = 2; g <= 8; ++g)
        for (const auto& mu : partitions(g)) {
            const auto c = components(mu);
            CHECK(!c.empty());
            CHECK(c.size() <= 3);
        }
    CHECK(to_string(L::Hyperelliptic) == "hyp");
    CHECK(to_string(L::NonHyperelliptic) == "nonhyp");
}

TEST_CASE("merging zeros") {
    CHECK(orders_of(merge_adjacent(Partition({1, 1}))) == std::vector<std::vector<int>>{{2}});
    const auto m = orders_of(merge_adjacent(Partition({2, 1, 1})));
    CHECK(m.size() == 2);
    CHECK(std::find(m.begin(), m.end(), std::vector<int>{3, 1}) != m.end());
    CHECK(std::find(m.begin(), m.end(), std::vector<int>{2, 2}) != m.end());
    try {
        merge_adjacent(Partition({4}));
        FAIL("expected an error");
    } catch (const std::invalid_argument& e) {
        CHECK(std::string(e.what()) == "nothing to merge");
    }
}
