#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "bruhat_flip/bipoly.hpp"
#include "bruhat_flip/flipclass.hpp"
#include "bruhat_flip/poset.hpp"

namespace bflip {

/// Layered graph of the (element, time) pairs visited by a set of paths.
class TimeSupport {
 public:
  struct Vertex {
    int time;
    Elem elem;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
  };
  struct Edge {
    int from;
    int to;
    int label;  // reflection index, -1 when built without a group
  };

  /// From the paths of a flipclass; edges are labelled when `g` is given.
  static TimeSupport of(const Flipclass& f, const CoxeterGroup* g = nullptr);
  /// From arbitrary equal-length vertex sequences.
  static TimeSupport from_paths(std::span<const std::vector<Elem>> paths, const CoxeterGroup* g = nullptr);

  int size() const { return static_cast<int>(vertices_.size()); }
  int height() const { return height_; }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  /// Vertex index of (time, elem), or -1.
  int find(int time, Elem elem) const;
  int source() const { return 0; }
  int sink() const { return size() - 1; }

  /// The time-support poset; covers are exactly the edges.
  const Poset& poset() const { return poset_; }
  /// Reachability a <= b in the poset.
  bool leq(int a, int b) const { return (reach_[a][b / 64] >> (b % 64)) & 1ULL; }

 private:
  void finish();

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  int height_ = 0;
  Poset poset_;
  std::vector<std::vector<std::uint64_t>> reach_;
};

/// Sum over a <= b of x^in(a,b) y^out(a,b), where in(a,b) counts upper covers c
/// of a with c <= b plus lower covers c of b with a <= c, and out(a,b) counts
/// lower covers of a plus upper covers of b.
BiPoly valence_polynomial(const TimeSupport& ts);

/// Valence polynomial of a flipclass.
BiPoly valence_polynomial(const Flipclass& f);

}  // namespace bflip
