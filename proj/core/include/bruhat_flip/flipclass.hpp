#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bruhat_flip/group.hpp"
#include "bruhat_flip/path.hpp"
#include "bruhat_flip/reflection_order.hpp"

namespace bflip {

/// Flip-closed, flip-connected set of h-paths from u to v. Paths are kept
/// flattened (stride h+1) in lexicographic order; `data` is also the
/// canonical key.
struct Flipclass {
  Elem u = 0;
  Elem v = 0;
  int h = 0;
  std::vector<Elem> data;

  std::size_t size() const { return data.size() / static_cast<std::size_t>(h + 1); }
  std::span<const Elem> path(std::size_t i) const {
    return {data.data() + i * static_cast<std::size_t>(h + 1), static_cast<std::size_t>(h + 1)};
  }
  bool contains(std::span<const Elem> verts) const;

  /// Builds a flipclass record from a set of equal-length vertex sequences
  /// (sorted and deduplicated here). No closure check is made.
  static Flipclass from_paths(std::vector<std::vector<Elem>> paths);

  friend bool operator==(const Flipclass& a, const Flipclass& b) { return a.data == b.data; }
  friend bool operator<(const Flipclass& a, const Flipclass& b) { return a.data < b.data; }
};

/// Closure of one path under all flips f_1 .. f_{h-1}.
Flipclass flipclass_of(FlipCache& cache, std::span<const Elem> path);
inline Flipclass flipclass_of(FlipCache& cache, const Path& p) { return flipclass_of(cache, p.x); }

/// True when every flip of every path stays inside F and F is flip-connected.
bool is_flipclass(FlipCache& cache, const Flipclass& f);

struct EnumerateOptions {
  /// Drop paths that cannot end at an element of length <= this (-1: no bound).
  int max_end_length = -1;
  std::size_t cap_paths = 10'000'000;
};

/// All h-flipclasses starting at u, found from their increasing paths and
/// sorted by key.
std::vector<Flipclass> enumerate_flipclasses(FlipCache& cache, Elem u, int h,
                                             const ReflectionOrdering& ord,
                                             const EnumerateOptions& opts = {});

/// Number of paths of F whose labels increase for `ord`.
std::size_t count_increasing(const CoxeterGroup& g, const Flipclass& f, const ReflectionOrdering& ord);

struct FlipclassInfo {
  std::vector<Elem> elements;  // E(F), sorted
  std::vector<int> labels;     // T(F), sorted reflection indices
  int span_dim = 0;
  bool is_dihedral = false;
  bool is_reducible = false;
};

FlipclassInfo flipclass_info(const CoxeterGroup& g, const Flipclass& f);
/// Rank of the roots of a set of reflections.
int span_rank(const CoxeterGroup& g, std::span<const int> labels);

enum class W0Variant { right, left, conj };

/// right: x -> x w0 reversed; left: x -> w0 x reversed; conj: x -> w0 x w0.
Flipclass w0_transform(const CoxeterGroup& g, const Flipclass& f, W0Variant variant);

/// Searches for a vertex bijection E(F1) -> E(F2) that carries paths onto
/// paths (reversed ones when `anti`) and commutes with the flips (f_i, or
/// f_{h-i} when `anti`). Throws CapExceeded above `cap` vertices.
bool comb_isomorphic(FlipCache& c1, const Flipclass& f1, FlipCache& c2, const Flipclass& f2,
                     bool anti = false, std::size_t cap = 200);

/// Group W1 x W2 with the generators of W1 first.
GroupPtr product_group(const CoxeterGroup& g1, const CoxeterGroup& g2);
Elem product_element(const CoxeterGroup& prod, const CoxeterGroup& g1, Elem x,
                     const CoxeterGroup& g2, Elem y);
/// All shuffles of paths of F1 and F2, as paths of the product group.
Flipclass shuffle_product(const CoxeterGroup& prod, const CoxeterGroup& g1, const Flipclass& f1,
                          const CoxeterGroup& g2, const Flipclass& f2);

}  // namespace bflip
