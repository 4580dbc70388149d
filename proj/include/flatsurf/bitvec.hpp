#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace flatsurf {

/// Dense vector over GF(2).
class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

    static BitVec unit(std::size_t n, std::size_t i) {
        BitVec b(n);
        b.set(i);
        return b;
    }

    std::size_t size() const { return size_; }
    bool get(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }
    void set(std::size_t i, bool value = true) {
        const std::uint64_t m = std::uint64_t{1} << (i % 64);
        if (value)
            words_[i / 64] |= m;
        else
            words_[i / 64] &= ~m;
    }
    void flip(std::size_t i) { words_[i / 64] ^= std::uint64_t{1} << (i % 64); }

    BitVec& operator^=(const BitVec& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    friend BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    std::size_t count() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    /// Parity of the AND of two vectors.
    friend bool dot(const BitVec& a, const BitVec& b) {
        std::uint64_t acc = 0;
        for (std::size_t i = 0; i < a.words_.size(); ++i) acc ^= a.words_[i] & b.words_[i];
        return std::popcount(acc) & 1;
    }

    friend bool operator==(const BitVec&, const BitVec&) = default;

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Rank over GF(2).
inline std::size_t gf2_rank(std::vector<BitVec> rows) {
    std::size_t rank = 0;
    const std::size_t n = rows.empty() ? 0 : rows.front().size();
    for (std::size_t c = 0; c < n && rank < rows.size(); ++c) {
        std::size_t p = rank;
        while (p < rows.size() && !rows[p].get(c)) ++p;
        if (p == rows.size()) continue;
        std::swap(rows[rank], rows[p]);
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (r != rank && rows[r].get(c)) rows[r] ^= rows[rank];
        ++rank;
    }
    return rank;
}

}  // namespace flatsurf
