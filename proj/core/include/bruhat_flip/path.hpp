#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "bruhat_flip/group.hpp"

namespace bflip {

/// A path x_0 -> x_1 -> ... -> x_h in the Bruhat graph, stored by its
/// vertices. Labels t_i = x_i x_{i-1}^{-1} are recovered from the graph.
struct Path {
  std::vector<Elem> x;

  int h() const { return static_cast<int>(x.size()) - 1; }
  Elem start() const { return x.front(); }
  Elem end() const { return x.back(); }
  friend auto operator<=>(const Path&, const Path&) = default;
};

/// Labels (reflection indices) of a vertex sequence. Throws Error if some
/// step is not a Bruhat-graph edge.
std::vector<int> path_labels(const CoxeterGroup& g, std::span<const Elem> verts);
bool is_path(const CoxeterGroup& g, std::span<const Elem> verts);

/// Memoized two-path flips for one group. Not thread-safe; one per worker.
class FlipCache {
 public:
  explicit FlipCache(const CoxeterGroup& g) : g_(&g) {}

  const CoxeterGroup& group() const { return *g_; }
  /// Middles of all 2-paths a -> . -> b, sorted by (length, id), so that the
  /// flip pairs entries 2k and 2k+1. Throws OddMiddleCount.
  const std::vector<Elem>& middles(Elem a, Elem b);
  /// The partner of x among the middles of a -> x -> b.
  Elem flip2(Elem a, Elem x, Elem b);

 private:
  const CoxeterGroup* g_;
  std::unordered_map<std::uint64_t, std::vector<Elem>> memo_;
};

/// Replaces x_i (1 <= i <= h-1) by its flip. Throws IndexOutOfRange.
Path flip_i(FlipCache& cache, const Path& p, int i);
/// In-place variant on a raw vertex sequence.
void flip_in_place(FlipCache& cache, std::span<Elem> verts, int i);

/// All h-paths from u to v. Throws CapExceeded beyond `cap` paths.
std::vector<Path> enumerate_paths(const CoxeterGroup& g, Elem u, Elem v, int h,
                                  std::size_t cap = 10'000'000);

}  // namespace bflip
