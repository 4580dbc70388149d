#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace flatsurf {

/// Malformed cycle notation; `column` is 1-based within the parsed text.
class CycleSyntaxError : public std::invalid_argument {
public:
    CycleSyntaxError(std::size_t column, const std::string& reason, std::string_view text);
    std::size_t column() const { return column_; }
    const std::string& reason() const { return reason_; }

private:
    std::size_t column_;
    std::string reason_;
};

/// A permutation of {0, ..., n-1}. Text forms use 1-based cycle notation.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<std::uint32_t> images);

    static Permutation identity(std::size_t n);
    /// "(1,2,3)(4,5)" or "(1 2 3)(4 5)"; omitted labels are fixed points. Throws CycleSyntaxError.
    static Permutation from_cycles(std::size_t n, std::string_view text);

    std::size_t size() const { return images_.size(); }
    std::uint32_t operator()(std::uint32_t i) const { return images_[i]; }
    const std::vector<std::uint32_t>& images() const { return images_; }

    Permutation inverse() const;
    std::vector<std::vector<std::uint32_t>> cycles() const;
    /// Cycle lengths, sorted descending, fixed points included.
    std::vector<int> cycle_type() const;
    bool is_identity() const;
    std::string to_cycle_string() const;  // "(1,2,3)(4,5)"; "()" for the identity

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<std::uint32_t> images_;
};

/// Composition applied right to left: (a * b)(i) = a(b(i)).
Permutation operator*(const Permutation& a, const Permutation& b);

/// sigma * p * sigma^-1.
Permutation conjugate(const Permutation& p, const Permutation& sigma);

}  // namespace flatsurf
