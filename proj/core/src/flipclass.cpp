#include "bruhat_flip/flipclass.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <unordered_set>

#include "bruhat_flip/errors.hpp"
#include "bruhat_flip/linalg.hpp"

namespace bflip {
namespace {

struct VecHash {
  std::size_t operator()(const std::vector<Elem>& v) const noexcept {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (Elem x : v) h = (h ^ static_cast<std::size_t>(x)) * 0x100000001b3ULL;
    return h;
  }
};

}  // namespace

bool Flipclass::contains(std::span<const Elem> verts) const {
  const std::size_t stride = h + 1;
  if (verts.size() != stride) return false;
  std::size_t lo = 0, hi = size();
  while (lo < hi) {
    std::size_t mid = (lo + hi) / 2;
    auto p = path(mid);
    int c = std::lexicographical_compare(p.begin(), p.end(), verts.begin(), verts.end()) ? -1
            : std::equal(p.begin(), p.end(), verts.begin())                             ? 0
                                                                                        : 1;
    if (c == 0) return true;
    if (c < 0) lo = mid + 1;
    else hi = mid;
  }
  return false;
}

Flipclass Flipclass::from_paths(std::vector<std::vector<Elem>> paths) {
  Flipclass f;
  if (paths.empty()) return f;
  std::sort(paths.begin(), paths.end());
  paths.erase(std::unique(paths.begin(), paths.end()), paths.end());
  f.h = static_cast<int>(paths[0].size()) - 1;
  f.u = paths[0].front();
  f.v = paths[0].back();
  f.data.reserve(paths.size() * paths[0].size());
  for (const auto& p : paths) {
    if (static_cast<int>(p.size()) != f.h + 1 || p.front() != f.u || p.back() != f.v) {
      throw Error("flipclass paths must share endpoints and length");
    }
    f.data.insert(f.data.end(), p.begin(), p.end());
  }
  return f;
}

Flipclass flipclass_of(FlipCache& cache, std::span<const Elem> path) {
  std::set<std::vector<Elem>> seen;
  std::deque<std::vector<Elem>> queue;
  std::vector<Elem> start(path.begin(), path.end());
  seen.insert(start);
  queue.push_back(std::move(start));
  const int h = static_cast<int>(path.size()) - 1;
  while (!queue.empty()) {
    std::vector<Elem> p = std::move(queue.front());
    queue.pop_front();
    for (int i = 1; i < h; ++i) {
      std::vector<Elem> q = p;
      flip_in_place(cache, q, i);
      if (seen.insert(q).second) queue.push_back(std::move(q));
    }
  }
  Flipclass f;
  f.u = path.front();
  f.v = path.back();
  f.h = h;
  f.data.reserve(seen.size() * (h + 1));
  for (const auto& p : seen) f.data.insert(f.data.end(), p.begin(), p.end());
  return f;
}

bool is_flipclass(FlipCache& cache, const Flipclass& f) {
  if (f.size() == 0) return false;
  for (std::size_t k = 0; k < f.size(); ++k) {
    auto p = f.path(k);
    if (!is_path(cache.group(), p)) return false;
    for (int i = 1; i < f.h; ++i) {
      std::vector<Elem> q(p.begin(), p.end());
      flip_in_place(cache, q, i);
      if (!f.contains(q)) return false;
    }
  }
  return flipclass_of(cache, f.path(0)) == f;
}

std::vector<Flipclass> enumerate_flipclasses(FlipCache& cache, Elem u, int h,
                                             const ReflectionOrdering& ord,
                                             const EnumerateOptions& opts) {
  const CoxeterGroup& g = cache.group();
  std::vector<Flipclass> out;
  std::unordered_set<std::vector<Elem>, VecHash> covered;
  std::vector<Elem> cur{u};
  std::size_t visited = 0;
  auto dfs = [&](auto&& self, int last_rank) -> void {
    int k = static_cast<int>(cur.size()) - 1;
    if (k == h) {
      if (covered.count(cur)) return;
      Flipclass f = flipclass_of(cache, cur);
      for (std::size_t i = 0; i < f.size(); ++i) {
        auto p = f.path(i);
        covered.emplace(p.begin(), p.end());
      }
      if (covered.size() > opts.cap_paths) throw CapExceeded("flipclass enumeration exceeds path cap");
      out.push_back(std::move(f));
      return;
    }
    for (const auto& e : g.up_edges(cur.back())) {
      int r = ord.rank[e.refl];
      if (r <= last_rank) continue;
      if (opts.max_end_length >= 0 && g.length(e.target) + (h - k - 1) > opts.max_end_length) continue;
      if (++visited > opts.cap_paths) throw CapExceeded("flipclass enumeration exceeds path cap");
      cur.push_back(e.target);
      self(self, r);
      cur.pop_back();
    }
  };
  dfs(dfs, -1);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t count_increasing(const CoxeterGroup& g, const Flipclass& f, const ReflectionOrdering& ord) {
  std::size_t n = 0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (ord.is_increasing(path_labels(g, f.path(i)))) ++n;
  }
  return n;
}

int span_rank(const CoxeterGroup& g, std::span<const int> labels) {
  std::vector<std::vector<Scalar>> rows;
  for (int r : labels) rows.push_back(g.root_of(r));
  return exact_rank(std::move(rows));
}

FlipclassInfo flipclass_info(const CoxeterGroup& g, const Flipclass& f) {
  FlipclassInfo info;
  std::set<int> labels;
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto p = f.path(i);
    info.elements.insert(info.elements.end(), p.begin(), p.end());
    for (int r : path_labels(g, p)) labels.insert(r);
  }
  std::sort(info.elements.begin(), info.elements.end());
  info.elements.erase(std::unique(info.elements.begin(), info.elements.end()), info.elements.end());
  info.labels.assign(labels.begin(), labels.end());
  info.span_dim = span_rank(g, info.labels);
  info.is_dihedral = info.span_dim == 2;
  // Components of the non-commutation graph on T(F).
  const std::size_t n = info.labels.size();
  std::vector<int> comp(n, -1);
  int comps = 0;
  for (std::size_t s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<std::size_t> stack{s};
    comp[s] = comps;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      Elem ta = g.reflection(info.labels[a]);
      for (std::size_t b = 0; b < n; ++b) {
        if (comp[b] >= 0) continue;
        Elem tb = g.reflection(info.labels[b]);
        if (g.multiply(ta, tb) != g.multiply(tb, ta)) {
          comp[b] = comps;
          stack.push_back(b);
        }
      }
    }
    ++comps;
  }
  info.is_reducible = comps > 1;
  return info;
}

Flipclass w0_transform(const CoxeterGroup& g, const Flipclass& f, W0Variant variant) {
  const Elem w0 = g.w0();
  std::vector<std::vector<Elem>> paths;
  paths.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    auto p = f.path(i);
    std::vector<Elem> q;
    q.reserve(p.size());
    for (Elem x : p) {
      switch (variant) {
        case W0Variant::right: q.push_back(g.multiply(x, w0)); break;
        case W0Variant::left: q.push_back(g.multiply(w0, x)); break;
        case W0Variant::conj: q.push_back(g.multiply(g.multiply(w0, x), w0)); break;
      }
    }
    if (variant != W0Variant::conj) std::reverse(q.begin(), q.end());
    paths.push_back(std::move(q));
  }
  return Flipclass::from_paths(std::move(paths));
}

namespace {

class IsoSearch {
 public:
  IsoSearch(FlipCache& c1, const Flipclass& f1, FlipCache& c2, const Flipclass& f2, bool anti)
      : c1_(c1), f1_(f1), c2_(c2), f2_(f2), anti_(anti) {}

  bool run(std::size_t cap) {
    if (f1_.h != f2_.h || f1_.size() != f2_.size()) return false;
    e1_ = flipclass_elements(f1_);
    e2_ = flipclass_elements(f2_);
    if (e1_.size() != e2_.size()) return false;
    if (e1_.size() > cap) throw CapExceeded("flipclass too large for isomorphism search");
    fwd_.assign(e1_.size(), -1);
    bwd_.assign(e2_.size(), -1);
    done_.assign(f1_.size(), 0);
    return extend(0);
  }

 private:
  static std::vector<Elem> flipclass_elements(const Flipclass& f) {
    std::vector<Elem> e(f.data);
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());
    return e;
  }
  static int index_of(const std::vector<Elem>& e, Elem x) {
    return static_cast<int>(std::lower_bound(e.begin(), e.end(), x) - e.begin());
  }

  // Image of path k of F2 read in the direction matching F1.
  Elem image_at(std::size_t k, int i) const {
    auto p = f2_.path(k);
    return anti_ ? p[f2_.h - i] : p[i];
  }

  bool extend(std::size_t placed) {
    if (placed == f1_.size()) return verify_flips();
    // Next path: the one with the most vertices already mapped.
    std::size_t best = 0;
    int best_score = -1;
    for (std::size_t k = 0; k < f1_.size(); ++k) {
      if (done_[k]) continue;
      int score = 0;
      for (Elem x : f1_.path(k)) score += fwd_[index_of(e1_, x)] >= 0;
      if (score > best_score) {
        best_score = score;
        best = k;
      }
    }
    auto p1 = f1_.path(best);
    done_[best] = 1;
    for (std::size_t k = 0; k < f2_.size(); ++k) {
      std::vector<std::pair<int, int>> added;
      bool ok = true;
      for (int i = 0; i <= f1_.h && ok; ++i) {
        int a = index_of(e1_, p1[i]);
        int b = index_of(e2_, image_at(k, i));
        if (fwd_[a] == -1 && bwd_[b] == -1) {
          fwd_[a] = b;
          bwd_[b] = a;
          added.emplace_back(a, b);
        } else if (fwd_[a] != b || bwd_[b] != a) {
          ok = false;
        }
      }
      if (ok && extend(placed + 1)) return true;
      for (auto [a, b] : added) {
        fwd_[a] = -1;
        bwd_[b] = -1;
      }
    }
    done_[best] = 0;
    return false;
  }

  std::vector<Elem> map_path(std::span<const Elem> p) const {
    std::vector<Elem> q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[i] = e2_[fwd_[index_of(e1_, p[i])]];
    if (anti_) std::reverse(q.begin(), q.end());
    return q;
  }

  bool verify_flips() {
    const int h = f1_.h;
    for (std::size_t k = 0; k < f1_.size(); ++k) {
      std::vector<Elem> img = map_path(f1_.path(k));
      for (int i = 1; i < h; ++i) {
        std::vector<Elem> q(f1_.path(k).begin(), f1_.path(k).end());
        flip_in_place(c1_, q, i);
        std::vector<Elem> lhs = map_path(q);
        std::vector<Elem> rhs = img;
        flip_in_place(c2_, rhs, anti_ ? h - i : i);
        if (lhs != rhs) return false;
      }
    }
    return true;
  }

  FlipCache& c1_;
  const Flipclass& f1_;
  FlipCache& c2_;
  const Flipclass& f2_;
  bool anti_;
  std::vector<Elem> e1_, e2_;
  std::vector<int> fwd_, bwd_;
  std::vector<char> done_;
};

}  // namespace

bool comb_isomorphic(FlipCache& c1, const Flipclass& f1, FlipCache& c2, const Flipclass& f2,
                     bool anti, std::size_t cap) {
  return IsoSearch(c1, f1, c2, f2, anti).run(cap);
}

GroupPtr product_group(const CoxeterGroup& g1, const CoxeterGroup& g2) {
  std::vector<DiagramFactor> factors = g1.diagram().factors();
  for (const auto& f : g2.diagram().factors()) factors.push_back(f);
  return CoxeterGroup::build(Diagram(std::move(factors), 1 << 20));
}

Elem product_element(const CoxeterGroup& prod, const CoxeterGroup& g1, Elem x,
                     const CoxeterGroup& g2, Elem y) {
  std::vector<int> word(g1.normal_form(x).begin(), g1.normal_form(x).end());
  for (int s : g2.normal_form(y)) word.push_back(s + g1.rank());
  return prod.from_word(word);
}

Flipclass shuffle_product(const CoxeterGroup& prod, const CoxeterGroup& g1, const Flipclass& f1,
                          const CoxeterGroup& g2, const Flipclass& f2) {
  const int h = f1.h + f2.h;
  std::vector<std::vector<Elem>> paths;
  std::vector<int> pick(h, 0);  // 1 where the step comes from F1
  std::fill(pick.begin(), pick.begin() + f1.h, 1);
  std::sort(pick.begin(), pick.end());
  do {
    for (std::size_t a = 0; a < f1.size(); ++a) {
      for (std::size_t b = 0; b < f2.size(); ++b) {
        auto p = f1.path(a);
        auto q = f2.path(b);
        std::vector<Elem> verts;
        int i = 0, j = 0;
        verts.push_back(product_element(prod, g1, p[0], g2, q[0]));
        for (int k = 0; k < h; ++k) {
          if (pick[k]) ++i;
          else ++j;
          verts.push_back(product_element(prod, g1, p[i], g2, q[j]));
        }
        paths.push_back(std::move(verts));
      }
    }
  } while (std::next_permutation(pick.begin(), pick.end()));
  return Flipclass::from_paths(std::move(paths));
}

}  // namespace bflip
