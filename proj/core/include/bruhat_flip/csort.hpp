#pragma once

#include <span>
#include <vector>

#include "bruhat_flip/group.hpp"

namespace bflip {

/// Positions (1-based) in the periodic word c c c ... of the greedily chosen
/// reduced subword for u. `c` lists generators in Coxeter-element order and
/// must contain every generator occurring in u.
std::vector<int> csort_key(const CoxeterGroup& g, Elem u, std::span<const int> c);

/// u <_c v: lexicographic comparison of the keys, a proper prefix is smaller.
bool csort_less(const CoxeterGroup& g, Elem u, Elem v, std::span<const int> c);

/// The generators of the group in diagram order.
std::vector<int> diagram_coxeter_element(const CoxeterGroup& g);

}  // namespace bflip
