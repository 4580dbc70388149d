#pragma once

#include "flatsurf/rational.hpp"

#include <cstddef>
#include <vector>

namespace flatsurf {

/// Rank of a dense rational matrix (rows may be empty) by exact Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Rational>> rows);

}  // namespace flatsurf
