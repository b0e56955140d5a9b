#include "bruhat_flip/poset.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "bruhat_flip/errors.hpp"

namespace bflip {

std::size_t Poset::num_covers() const {
  std::size_t n = 0;
  for (const auto& u : up) n += u.size();
  return n;
}

void Poset::add_cover(int a, int b) {
  up[a].push_back(b);
  down[b].push_back(a);
}

Poset Poset::dual() const {
  Poset d;
  int top = rank.empty() ? 0 : *std::max_element(rank.begin(), rank.end());
  d.rank.resize(rank.size());
  for (std::size_t i = 0; i < rank.size(); ++i) d.rank[i] = top - rank[i];
  d.up = down;
  d.down = up;
  d.elems = elems;
  return d;
}

Poset interval_poset(const CoxeterGroup& g, Elem u, Elem v, std::size_t cap) {
  if (!g.leq(u, v)) throw Error("interval_poset: u is not below v");
  std::vector<Elem> elems = g.interval(u, v);
  if (elems.size() > cap) throw CapExceeded("interval exceeds poset cap");
  Poset p;
  const int n = static_cast<int>(elems.size());
  p.elems = elems;
  p.rank.resize(n);
  p.up.resize(n);
  p.down.resize(n);
  for (int i = 0; i < n; ++i) {
    p.rank[i] = g.length(elems[i]) - g.length(u);
    for (const auto& e : g.up_edges(elems[i])) {
      if (g.length(e.target) != g.length(elems[i]) + 1) continue;
      auto it = std::lower_bound(elems.begin(), elems.end(), e.target);
      if (it != elems.end() && *it == e.target) p.add_cover(i, static_cast<int>(it - elems.begin()));
    }
  }
  return p;
}

namespace {

class Canonizer {
 public:
  Canonizer(const Poset& p, std::size_t max_leaves) : p_(p), max_leaves_(max_leaves) {}

  std::vector<int> run() {
    std::vector<int> colors = p_.rank;
    search(colors);
    return best_;
  }

 private:
  // Splits colour classes until stable; returns the number of classes.
  int refine(std::vector<int>& colors) const {
    const int n = p_.size();
    int classes = count_classes(colors);
    std::vector<std::vector<int>> sig(n);
    while (true) {
      for (int v = 0; v < n; ++v) {
        auto& s = sig[v];
        s.clear();
        s.push_back(colors[v]);
        std::size_t a = s.size();
        for (int w : p_.up[v]) s.push_back(colors[w]);
        std::sort(s.begin() + a, s.end());
        s.push_back(-1);
        a = s.size();
        for (int w : p_.down[v]) s.push_back(colors[w]);
        std::sort(s.begin() + a, s.end());
      }
      std::vector<int> idx(n);
      std::iota(idx.begin(), idx.end(), 0);
      std::sort(idx.begin(), idx.end(), [&](int a, int b) { return sig[a] < sig[b]; });
      int c = -1;
      for (int i = 0; i < n; ++i) {
        if (i == 0 || sig[idx[i]] != sig[idx[i - 1]]) ++c;
        colors[idx[i]] = c;
      }
      int now = c + 1;
      if (now == classes) return now;
      classes = now;
    }
  }

  static int count_classes(const std::vector<int>& colors) {
    std::vector<int> c = colors;
    std::sort(c.begin(), c.end());
    return static_cast<int>(std::unique(c.begin(), c.end()) - c.begin());
  }

  void search(std::vector<int> colors) {
    const int n = p_.size();
    int classes = refine(colors);
    if (classes == n) {
      leaf(colors);
      return;
    }
    std::vector<int> size(classes, 0);
    for (int c : colors) ++size[c];
    int target = 0;
    while (size[target] < 2) ++target;
    for (int v = 0; v < n; ++v) {
      if (colors[v] != target) continue;
      std::vector<int> next(n);
      for (int w = 0; w < n; ++w) next[w] = 2 * colors[w] + (colors[w] == target && w != v ? 1 : 0);
      search(std::move(next));
    }
  }

  void leaf(const std::vector<int>& label) {
    if (++leaves_ > max_leaves_) throw CapExceeded("poset canonical form search exceeded its budget");
    const int n = p_.size();
    std::vector<int> cert;
    cert.reserve(1 + n + 2 * p_.num_covers());
    cert.push_back(n);
    std::vector<int> rank_by_label(n);
    for (int v = 0; v < n; ++v) rank_by_label[label[v]] = p_.rank[v];
    cert.insert(cert.end(), rank_by_label.begin(), rank_by_label.end());
    std::vector<std::pair<int, int>> edges;
    for (int a = 0; a < n; ++a) {
      for (int b : p_.up[a]) edges.emplace_back(label[a], label[b]);
    }
    std::sort(edges.begin(), edges.end());
    for (auto [a, b] : edges) {
      cert.push_back(a);
      cert.push_back(b);
    }
    if (best_.empty() || cert < best_) best_ = std::move(cert);
  }

  const Poset& p_;
  std::size_t max_leaves_;
  std::size_t leaves_ = 0;
  std::vector<int> best_;
};

}  // namespace

std::vector<int> canonical_form(const Poset& p, std::size_t max_leaves) {
  if (p.size() == 0) return {0};
  return Canonizer(p, max_leaves).run();
}

}  // namespace bflip
