#include "bruhat_flip/time_support.hpp"

#include <algorithm>
#include <set>

#include "bruhat_flip/errors.hpp"

namespace bflip {

TimeSupport TimeSupport::of(const Flipclass& f, const CoxeterGroup* g) {
  std::vector<std::vector<Elem>> paths;
  paths.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) paths.emplace_back(f.path(i).begin(), f.path(i).end());
  return from_paths(paths, g);
}

TimeSupport TimeSupport::from_paths(std::span<const std::vector<Elem>> paths, const CoxeterGroup* g) {
  if (paths.empty()) throw Error("time support of an empty path set");
  TimeSupport ts;
  ts.height_ = static_cast<int>(paths[0].size()) - 1;
  std::set<Vertex> verts;
  for (const auto& p : paths) {
    if (static_cast<int>(p.size()) != ts.height_ + 1) throw Error("time support: paths of unequal length");
    for (int t = 0; t <= ts.height_; ++t) verts.insert({t, p[t]});
  }
  ts.vertices_.assign(verts.begin(), verts.end());
  std::set<std::pair<int, int>> edges;
  for (const auto& p : paths) {
    for (int t = 0; t < ts.height_; ++t) edges.emplace(ts.find(t, p[t]), ts.find(t + 1, p[t + 1]));
  }
  for (auto [a, b] : edges) {
    int label = g ? g->edge_label(ts.vertices_[a].elem, ts.vertices_[b].elem) : -1;
    ts.edges_.push_back({a, b, label});
  }
  ts.finish();
  return ts;
}

int TimeSupport::find(int time, Elem elem) const {
  Vertex key{time, elem};
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), key);
  if (it == vertices_.end() || *it != key) return -1;
  return static_cast<int>(it - vertices_.begin());
}

void TimeSupport::finish() {
  const int n = size();
  poset_.rank.resize(n);
  poset_.up.assign(n, {});
  poset_.down.assign(n, {});
  poset_.elems.resize(n);
  for (int i = 0; i < n; ++i) {
    poset_.rank[i] = vertices_[i].time;
    poset_.elems[i] = vertices_[i].elem;
  }
  for (const auto& e : edges_) poset_.add_cover(e.from, e.to);
  // Vertices are sorted by time, so a reverse sweep sees successors first.
  const std::size_t words = (n + 63) / 64;
  reach_.assign(n, std::vector<std::uint64_t>(words, 0));
  for (int a = n - 1; a >= 0; --a) {
    reach_[a][a / 64] |= 1ULL << (a % 64);
    for (int b : poset_.up[a]) {
      for (std::size_t w = 0; w < words; ++w) reach_[a][w] |= reach_[b][w];
    }
  }
}

BiPoly valence_polynomial(const TimeSupport& ts) {
  const Poset& p = ts.poset();
  const int n = ts.size();
  // Accumulate exponent pairs in a small dense table first.
  std::map<std::pair<int, int>, long long> counts;
  for (int a = 0; a < n; ++a) {
    for (int b = a; b < n; ++b) {
      if (!ts.leq(a, b)) continue;
      int in = 0;
      for (int c : p.up[a]) in += ts.leq(c, b);
      for (int c : p.down[b]) in += ts.leq(a, c);
      int out = static_cast<int>(p.down[a].size() + p.up[b].size());
      ++counts[{in, out}];
    }
  }
  BiPoly d;
  for (const auto& [e, c] : counts) d.add_term(e.first, e.second, mpz_class(static_cast<long>(c)));
  return d;
}

BiPoly valence_polynomial(const Flipclass& f) { return valence_polynomial(TimeSupport::of(f)); }

}  // namespace bflip
