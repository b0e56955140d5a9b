#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat_flip/diagram.hpp"
#include "bruhat_flip/scalar.hpp"

namespace bflip {

/// Element id. Ids are dense, 0 is the identity, and ids are sorted by
/// (length, ShortLex normal form).
using Elem = std::int32_t;

/// A vector of Scalar coordinates in the basis of simple roots.
using RootVec = std::vector<Scalar>;

struct RootSystem {
  /// C[j][i] with s_j(alpha_i) = alpha_i - C[j][i] alpha_j. Not symmetric in
  /// general; C[i][j] * C[j][i] = 4 cos^2(pi / m(i,j)).
  std::vector<std::vector<Scalar>> cartan;
  std::vector<RootVec> simple_roots;
  std::vector<RootVec> positive_roots;
  /// Index into positive_roots -> index into CoxeterGroup::reflections(), and back.
  std::vector<int> root_to_reflection;
  std::vector<int> reflection_to_root;
  /// False when some factor is a dihedral group I2(m) without a realization
  /// over Q(sqrt 5). Those factors get placeholder roots that only keep the
  /// linear (in)dependence pattern of the true ones.
  bool geometric = true;
};

/// One Bruhat-graph edge u -> target, labelled by a reflection index.
struct BruhatEdge {
  Elem target;
  std::int32_t refl;
};

struct BuildOptions {
  unsigned long long max_elements = 1'000'000;
};

/// Fully enumerated finite Coxeter group with its root system and Bruhat
/// graph. Immutable after build() and safe to share between threads.
class CoxeterGroup {
 public:
  static std::shared_ptr<const CoxeterGroup> build(const Diagram& diagram,
                                                   const BuildOptions& opts = {});
  static std::shared_ptr<const CoxeterGroup> build(std::string_view diagram,
                                                   const BuildOptions& opts = {});

  const Diagram& diagram() const { return diagram_; }
  const RootSystem& roots() const { return roots_; }

  int rank() const { return rank_; }
  Elem size() const { return static_cast<Elem>(length_.size()); }
  static constexpr Elem identity() { return 0; }
  Elem w0() const { return size() - 1; }

  int length(Elem w) const { return length_[w]; }
  int max_length() const { return length_.back(); }
  Elem left_mult(int s, Elem w) const { return left_[static_cast<std::size_t>(w) * rank_ + s]; }
  Elem right_mult(Elem w, int s) const { return right_[static_cast<std::size_t>(w) * rank_ + s]; }
  Elem inverse(Elem w) const { return inverse_[w]; }
  Elem multiply(Elem a, Elem b) const;
  /// Product of the generators in order; the word need not be reduced.
  Elem from_word(std::span<const int> word) const;
  std::span<const int> normal_form(Elem w) const {
    return {nf_data_.data() + nf_offset_[w], static_cast<std::size_t>(length_[w])};
  }
  bool is_left_descent(int s, Elem w) const { return length(left_mult(s, w)) < length(w); }
  bool is_right_descent(Elem w, int s) const { return length(right_mult(w, s)) < length(w); }

  /// Reflections sorted by element id; labels everywhere are indices into this.
  const std::vector<Elem>& reflections() const { return reflections_; }
  int num_reflections() const { return static_cast<int>(reflections_.size()); }
  Elem reflection(int r) const { return reflections_[r]; }
  /// Index of w among the reflections, or -1.
  int reflection_index(Elem w) const { return refl_index_[w]; }
  const RootVec& root_of(int r) const { return roots_.positive_roots[roots_.reflection_to_root[r]]; }
  /// Reflection index of the simple reflection s.
  int simple_reflection(int s) const { return refl_index_[left_mult(s, identity())]; }

  /// Out-edges u -> t u with l(tu) > l(u), sorted by target.
  std::span<const BruhatEdge> up_edges(Elem u) const {
    return {up_.data() + up_off_[u], up_.data() + up_off_[u + 1]};
  }
  /// In-edges x -> v, sorted by source (stored in `target`).
  std::span<const BruhatEdge> down_edges(Elem v) const {
    return {down_.data() + down_off_[v], down_.data() + down_off_[v + 1]};
  }
  /// Label of the edge u -> v, or -1 when there is none.
  int edge_label(Elem u, Elem v) const;

  /// Bruhat order by the lifting recursion on a left descent of v.
  bool leq(Elem u, Elem v) const;
  /// Elements of [u,v] sorted by id (so also by length). Empty unless u <= v.
  std::vector<Elem> interval(Elem u, Elem v) const;

  /// True for a single type A factor, where one-line notation is used.
  bool is_type_a() const;
  /// One-line notation for type A, otherwise "s1 s3 s2"; "e" for the identity.
  std::string format(Elem w) const;
  std::string format_word(Elem w) const;
  std::string format_permutation(Elem w) const;
  /// Accepts a permutation in one-line notation (type A only), "e", or a word
  /// such as "s1 s2 s1" / "s1s2s1" (generators numbered from 1).
  Elem parse(std::string_view text) const;

 private:
  CoxeterGroup() = default;

  Diagram diagram_;
  RootSystem roots_;
  int rank_ = 0;
  std::vector<int> length_;
  std::vector<Elem> left_;
  std::vector<Elem> right_;
  std::vector<Elem> inverse_;
  std::vector<int> nf_data_;
  std::vector<std::size_t> nf_offset_;
  std::vector<Elem> reflections_;
  std::vector<int> refl_index_;
  std::vector<std::size_t> up_off_, down_off_;
  std::vector<BruhatEdge> up_, down_;

  friend class GroupBuilder;
};

using GroupPtr = std::shared_ptr<const CoxeterGroup>;

/// Memoized reachability in the Bruhat graph: down(v) = {v} united with the
/// down-sets of the lower covers of v. Not thread-safe; use one per worker.
class BruhatDownSets {
 public:
  explicit BruhatDownSets(GroupPtr g) : g_(std::move(g)) {}
  bool leq(Elem u, Elem v);

 private:
  const std::vector<std::uint64_t>& down(Elem v);
  GroupPtr g_;
  std::vector<std::vector<std::uint64_t>> memo_;
};

std::string format_word(std::span<const int> word);

}  // namespace bflip
