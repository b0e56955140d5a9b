#include "bruhat_flip/path.hpp"

#include <algorithm>

#include "bruhat_flip/errors.hpp"

namespace bflip {

std::vector<int> path_labels(const CoxeterGroup& g, std::span<const Elem> verts) {
  std::vector<int> labels;
  labels.reserve(verts.size());
  for (std::size_t i = 1; i < verts.size(); ++i) {
    int r = g.edge_label(verts[i - 1], verts[i]);
    if (r < 0) throw Error("not a Bruhat-graph path");
    labels.push_back(r);
  }
  return labels;
}

bool is_path(const CoxeterGroup& g, std::span<const Elem> verts) {
  for (std::size_t i = 1; i < verts.size(); ++i) {
    if (g.edge_label(verts[i - 1], verts[i]) < 0) return false;
  }
  return !verts.empty();
}

const std::vector<Elem>& FlipCache::middles(Elem a, Elem b) {
  std::uint64_t key = (static_cast<std::uint64_t>(static_cast<std::uint32_t>(a)) << 32) |
                      static_cast<std::uint32_t>(b);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  const CoxeterGroup& g = *g_;
  std::vector<Elem> mids;
  for (const auto& e : g.up_edges(a)) {
    if (g.length(e.target) < g.length(b) && g.edge_label(e.target, b) >= 0) mids.push_back(e.target);
  }
  std::sort(mids.begin(), mids.end(), [&g](Elem x, Elem y) {
    if (g.length(x) != g.length(y)) return g.length(x) < g.length(y);
    return x < y;
  });
  if (mids.size() % 2 != 0) {
    throw OddMiddleCount("odd number of 2-paths between " + g.format(a) + " and " + g.format(b));
  }
  return memo_.emplace(key, std::move(mids)).first->second;
}

Elem FlipCache::flip2(Elem a, Elem x, Elem b) {
  const auto& mids = middles(a, b);
  auto it = std::find(mids.begin(), mids.end(), x);
  if (it == mids.end()) throw Error("flip2: not a 2-path");
  std::size_t pos = static_cast<std::size_t>(it - mids.begin());
  return mids[pos ^ 1];
}

void flip_in_place(FlipCache& cache, std::span<Elem> verts, int i) {
  int h = static_cast<int>(verts.size()) - 1;
  if (i < 1 || i > h - 1) throw IndexOutOfRange("flip index " + std::to_string(i) + " not in [1, h-1]");
  verts[i] = cache.flip2(verts[i - 1], verts[i], verts[i + 1]);
}

Path flip_i(FlipCache& cache, const Path& p, int i) {
  Path q = p;
  flip_in_place(cache, q.x, i);
  return q;
}

std::vector<Path> enumerate_paths(const CoxeterGroup& g, Elem u, Elem v, int h, std::size_t cap) {
  std::vector<Path> out;
  int d = g.length(v) - g.length(u);
  if (h < 0 || d < h || (d - h) % 2 != 0 || !g.leq(u, v)) return out;
  std::vector<Elem> cur{u};
  auto dfs = [&](auto&& self) -> void {
    Elem x = cur.back();
    int left = h - (static_cast<int>(cur.size()) - 1);
    if (left == 0) {
      if (x == v) {
        if (out.size() >= cap) throw CapExceeded("path enumeration exceeds cap");
        out.push_back(Path{cur});
      }
      return;
    }
    for (const auto& e : g.up_edges(x)) {
      Elem y = e.target;
      int rest = g.length(v) - g.length(y);
      if (rest < left - 1 || (left == 1 && y != v)) continue;
      if (left > 1 && !g.leq(y, v)) continue;
      cur.push_back(y);
      self(self);
      cur.pop_back();
    }
  };
  dfs(dfs);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace bflip
