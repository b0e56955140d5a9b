#pragma once

#include <cstddef>
#include <vector>

#include "bruhat_flip/group.hpp"

namespace bflip {

/// Finite graded poset given by its cover relation. Vertices are 0..n-1.
struct Poset {
  std::vector<int> rank;
  std::vector<std::vector<int>> up;    // upper covers
  std::vector<std::vector<int>> down;  // lower covers
  /// Optional group elements the vertices stand for (interval posets).
  std::vector<Elem> elems;

  int size() const { return static_cast<int>(rank.size()); }
  std::size_t num_covers() const;
  void add_cover(int a, int b);
  /// The opposite poset, ranks measured from the top.
  Poset dual() const;
};

/// The interval [u,v] with Bruhat covers. Throws CapExceeded above `cap`
/// elements and Error when u is not below v.
Poset interval_poset(const CoxeterGroup& g, Elem u, Elem v, std::size_t cap = 10'000);

/// Isomorphism certificate: two posets get equal certificates iff they are
/// isomorphic. Computed by colour refinement on (rank, cover colours) with
/// individualisation, keeping the lexicographically least relabelled cover
/// list. Throws CapExceeded when the search tree exceeds `max_leaves`.
std::vector<int> canonical_form(const Poset& p, std::size_t max_leaves = 1'000'000);

}  // namespace bflip
