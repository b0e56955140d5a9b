#pragma once

#include <span>
#include <vector>

#include "bruhat_flip/group.hpp"

namespace bflip {

/// Total order on the reflections of a group, stored as a permutation of
/// reflection indices together with its inverse.
struct ReflectionOrdering {
  std::vector<int> order;  // position -> reflection index
  std::vector<int> rank;   // reflection index -> position

  static ReflectionOrdering from_sequence(std::vector<int> order);
  ReflectionOrdering reversed() const;
  bool less(int r1, int r2) const { return rank[r1] < rank[r2]; }
  /// True when the labels are increasing (non-strictly, which is the same
  /// thing for path labels).
  bool is_increasing(std::span<const int> labels) const;
  friend bool operator==(const ReflectionOrdering& a, const ReflectionOrdering& b) {
    return a.order == b.order;
  }
};

/// Ordering t_1, ..., t_N with t_i = s_1 ... s_{i-1} s_i s_{i-1} ... s_1 for a
/// reduced word s_1 ... s_N of w0. Throws NotReduced or NotLongestElement.
ReflectionOrdering reflection_ordering_from_word(const CoxeterGroup& g, std::span<const int> word);

/// The ordering of the ShortLex normal form of w0.
ReflectionOrdering default_ordering(const CoxeterGroup& g);

/// Checks the restriction to every dihedral reflection subgroup.
bool validate_reflection_ordering(const CoxeterGroup& g, const ReflectionOrdering& ord);

/// Reflections in the subgroup generated by `generators` (reflection indices),
/// sorted. Throws CapExceeded when the subgroup has more than `cap` elements.
std::vector<int> reflection_subgroup_reflections(const CoxeterGroup& g,
                                                 std::span<const int> generators,
                                                 std::size_t cap = 1'000'000);

/// Canonical Coxeter generators chi(W') of W' = <refl_set>, sorted.
std::vector<int> chi(const CoxeterGroup& g, std::span<const int> refl_set,
                     std::size_t cap = 1'000'000);

/// Reflections of the dihedral subgroup generated by two reflections, listed
/// along the chain a, aba, ababa, ..., b where {a, b} = chi.
std::vector<int> dihedral_chain(const CoxeterGroup& g, int r1, int r2);

/// Random reduced word for w0 obtained by a random walk down the weak order.
template <class Rng>
std::vector<int> random_w0_word(const CoxeterGroup& g, Rng& rng) {
  std::vector<int> word;
  Elem w = g.w0();
  while (w != CoxeterGroup::identity()) {
    std::vector<int> desc;
    for (int s = 0; s < g.rank(); ++s) {
      if (g.is_left_descent(s, w)) desc.push_back(s);
    }
    int s = desc[rng() % desc.size()];
    word.push_back(s);
    w = g.left_mult(s, w);
  }
  return word;
}

}  // namespace bflip
