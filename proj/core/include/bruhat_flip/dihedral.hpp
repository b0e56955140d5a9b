#pragma once

#include <cstdint>
#include <vector>

#include "bruhat_flip/rtilde.hpp"

namespace bflip {

/// Binomial coefficient; 0 outside 0 <= k <= n.
std::uint64_t binomial(int n, int k);

/// Number of h-flipclasses in a dihedral interval of length d.
std::uint64_t dihedral_flipclass_count(int d, int h);

/// Length-h sequences of odd positive integers summing to d, in
/// lexicographic order.
std::vector<std::vector<int>> odd_compositions(int d, int h);

/// R~ of a dihedral interval of length d.
QPoly dihedral_rtilde(int d);

}  // namespace bflip
