#pragma once

#include <vector>

#include "bruhat_flip/scalar.hpp"

namespace bflip {

/// Rank of a list of vectors over Q(sqrt 5), by Bareiss elimination.
int exact_rank(std::vector<std::vector<Scalar>> rows);

}  // namespace bflip
