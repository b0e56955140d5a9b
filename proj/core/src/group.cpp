#include "bruhat_flip/group.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <numeric>
#include <unordered_map>

#include "bruhat_flip/errors.hpp"

namespace bflip {

struct RootVecHash {
  std::size_t operator()(const RootVec& v) const noexcept {
    std::size_t h = v.size();
    for (const auto& x : v) h = h * 0x100000001b3ULL ^ x.hash();
    return h;
  }
};

namespace {

// m values whose 4cos^2(pi/m) lies in Q(sqrt 5).
bool has_realization(int m) { return m == 2 || m == 3 || m == 4 || m == 5 || m == 6 || m == 10; }

// Fills C for one pair i<j of a factor, see RootSystem::cartan.
void set_cartan_pair(std::vector<std::vector<Scalar>>& c, int i, int j, int m, int short_node) {
  Scalar phi = Scalar::golden();
  int lng = short_node == i ? j : i;
  int sht = short_node == i ? i : j;
  switch (m) {
    case 2:
      break;
    case 3:
      c[i][j] = c[j][i] = -1;
      break;
    case 4:
      c[lng][sht] = -1;
      c[sht][lng] = -2;
      break;
    case 6:
      c[lng][sht] = -1;
      c[sht][lng] = -3;
      break;
    case 5:
      c[i][j] = c[j][i] = -phi;
      break;
    case 10:
      c[i][j] = -1;
      c[j][i] = -(Scalar(2) + phi);
      break;
    default:
      throw UnsupportedDiagram("no exact realization for m = " + std::to_string(m));
  }
}

}  // namespace

class GroupBuilder {
 public:
  GroupBuilder(const Diagram& d, const BuildOptions& opts) : d_(d), opts_(opts) {}

  std::shared_ptr<const CoxeterGroup> run() {
    if (d_.predicted_order() > opts_.max_elements) {
      throw CapExceeded("group " + d_.to_string() + " has " + std::to_string(d_.predicted_order()) +
                        " elements, cap is " + std::to_string(opts_.max_elements));
    }
    g_.reset(new CoxeterGroup());
    g_->diagram_ = d_;
    g_->rank_ = d_.rank();
    rank_ = d_.rank();
    setup_factors();
    enumerate();
    normal_forms_and_sort();
    derived_tables();
    reflections();
    root_system();
    bruhat_graph();
    return g_;
  }

 private:
  void setup_factors() {
    cartan_.assign(rank_, std::vector<Scalar>(rank_, Scalar(0)));
    combinatorial_.assign(d_.factors().size(), false);
    for (int i = 0; i < rank_; ++i) cartan_[i][i] = 2;
    for (std::size_t f = 0; f < d_.factors().size(); ++f) {
      const auto& fac = d_.factors()[f];
      int off = d_.factor_offset(static_cast<int>(f));
      int n = fac.rank();
      if (fac.family == Family::I && !has_realization(fac.param)) {
        combinatorial_[f] = true;
        continue;
      }
      // Short node for the pairs with m = 4 or 6 (Bourbaki numbering).
      int short_node = -1;
      if (fac.family == Family::B) short_node = off + n - 1;
      if (fac.family == Family::F) short_node = off + 2;
      if (fac.family == Family::G) short_node = off;
      if (fac.family == Family::I) short_node = fac.param == 6 ? off : off + 1;
      for (int i = off; i < off + n; ++i) {
        for (int j = i + 1; j < off + n; ++j) {
          int sn = short_node == i || short_node == j ? short_node : i;
          set_cartan_pair(cartan_, i, j, d_.m(i, j), sn);
        }
      }
    }
  }

  RootVec act(int j, const RootVec& key) const {
    RootVec out = key;
    int f = d_.factor_of(j);
    int off = d_.factor_offset(f);
    if (combinatorial_[f]) {
      // key = (k, e) for rho^k a^e with rho = ab.
      std::int64_t m = d_.factors()[f].param;
      std::int64_t k = key[off].rational_part().num();
      std::int64_t e = key[off + 1].rational_part().num();
      std::int64_t nk = j == off ? -k : -k - 1;
      nk = ((nk % m) + m) % m;
      out[off] = Scalar(nk);
      out[off + 1] = Scalar(1 - e);
      return out;
    }
    int n = d_.factors()[f].rank();
    for (int i = off; i < off + n; ++i) {
      if (i == j || cartan_[j][i].is_zero()) continue;
      out[i] -= cartan_[j][i] * key[j];
    }
    out[j] = -key[j];
    return out;
  }

  void enumerate() {
    RootVec start(rank_, Scalar(1));
    for (std::size_t f = 0; f < combinatorial_.size(); ++f) {
      if (!combinatorial_[f]) continue;
      int off = d_.factor_offset(static_cast<int>(f));
      start[off] = Scalar(0);
      start[off + 1] = Scalar(0);
    }
    std::unordered_map<RootVec, Elem, RootVecHash> ids;
    std::vector<RootVec> keys;
    ids.emplace(start, 0);
    keys.push_back(start);
    len_.push_back(0);
    for (std::size_t w = 0; w < keys.size(); ++w) {
      for (int s = 0; s < rank_; ++s) {
        RootVec next = act(s, keys[w]);
        auto [it, fresh] = ids.emplace(std::move(next), static_cast<Elem>(keys.size()));
        if (fresh) {
          if (keys.size() >= opts_.max_elements) throw CapExceeded("group enumeration cap hit");
          keys.push_back(it->first);
          len_.push_back(len_[w] + 1);
        }
        left_.push_back(it->second);
      }
    }
  }

  void normal_forms_and_sort() {
    const std::size_t n = len_.size();
    std::vector<std::vector<int>> nf(n);
    // BFS order has non-decreasing length, so s*w is always done before w.
    for (std::size_t w = 1; w < n; ++w) {
      for (int s = 0; s < rank_; ++s) {
        Elem sw = left_[w * rank_ + s];
        if (len_[sw] < len_[w]) {
          nf[w].reserve(len_[w]);
          nf[w].push_back(s);
          nf[w].insert(nf[w].end(), nf[sw].begin(), nf[sw].end());
          break;
        }
      }
    }
    std::vector<Elem> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Elem a, Elem b) {
      if (len_[a] != len_[b]) return len_[a] < len_[b];
      return nf[a] < nf[b];
    });
    std::vector<Elem> new_id(n);
    for (std::size_t i = 0; i < n; ++i) new_id[order[i]] = static_cast<Elem>(i);

    auto& g = *g_;
    g.length_.resize(n);
    g.left_.resize(n * rank_);
    g.nf_offset_.resize(n + 1);
    std::size_t total = 0;
    for (std::size_t i = 0; i < n; ++i) {
      Elem old = order[i];
      g.length_[i] = len_[old];
      for (int s = 0; s < rank_; ++s) g.left_[i * rank_ + s] = new_id[left_[old * rank_ + s]];
      g.nf_offset_[i] = total;
      total += nf[old].size();
    }
    g.nf_offset_[n] = total;
    g.nf_data_.reserve(total);
    for (std::size_t i = 0; i < n; ++i) {
      const auto& word = nf[order[i]];
      g.nf_data_.insert(g.nf_data_.end(), word.begin(), word.end());
    }
    left_.clear();
    left_.shrink_to_fit();
  }

  void derived_tables() {
    auto& g = *g_;
    const Elem n = g.size();
    g.inverse_.resize(n);
    for (Elem w = 0; w < n; ++w) {
      Elem x = 0;
      for (int s : g.normal_form(w)) x = g.left_mult(s, x);
      g.inverse_[w] = x;
    }
    g.right_.resize(static_cast<std::size_t>(n) * rank_);
    for (Elem w = 0; w < n; ++w) {
      for (int s = 0; s < rank_; ++s) {
        g.right_[static_cast<std::size_t>(w) * rank_ + s] = g.inverse_[g.left_mult(s, g.inverse_[w])];
      }
    }
  }

  void reflections() {
    auto& g = *g_;
    std::vector<char> seen(g.size(), 0);
    std::deque<Elem> queue;
    for (int s = 0; s < rank_; ++s) {
      Elem t = g.left_mult(s, 0);
      if (!seen[t]) {
        seen[t] = 1;
        queue.push_back(t);
      }
    }
    while (!queue.empty()) {
      Elem t = queue.front();
      queue.pop_front();
      for (int s = 0; s < rank_; ++s) {
        Elem c = g.left_mult(s, g.right_mult(t, s));
        if (!seen[c]) {
          seen[c] = 1;
          queue.push_back(c);
        }
      }
    }
    g.refl_index_.assign(g.size(), -1);
    for (Elem w = 0; w < g.size(); ++w) {
      if (seen[w]) {
        g.refl_index_[w] = static_cast<int>(g.reflections_.size());
        g.reflections_.push_back(w);
      }
    }
  }

  void root_system() {
    auto& g = *g_;
    RootSystem& rs = g.roots_;
    rs.cartan = cartan_;
    for (int i = 0; i < rank_; ++i) {
      RootVec a(rank_, Scalar(0));
      a[i] = 1;
      rs.simple_roots.push_back(a);
    }
    std::vector<int> root_refl;  // reflection element per root
    for (std::size_t f = 0; f < d_.factors().size(); ++f) {
      int off = d_.factor_offset(static_cast<int>(f));
      int n = d_.factors()[f].rank();
      if (combinatorial_[f]) {
        rs.geometric = false;
        int m = d_.factors()[f].param;
        for (int k = 0; k < m; ++k) {
          std::vector<int> word;
          for (int i = 0; i < 2 * k + 1; ++i) word.push_back(off + (i % 2));
          RootVec r(rank_, Scalar(0));
          r[off] = Rational(m - 1 - k, m - 1);
          r[off + 1] = Rational(k, m - 1);
          rs.positive_roots.push_back(r);
          root_refl.push_back(g.from_word(word));
        }
        continue;
      }
      std::unordered_map<RootVec, int, RootVecHash> index;
      std::size_t first = rs.positive_roots.size();
      for (int i = off; i < off + n; ++i) {
        index.emplace(rs.simple_roots[i], static_cast<int>(rs.positive_roots.size()));
        rs.positive_roots.push_back(rs.simple_roots[i]);
        root_refl.push_back(g.left_mult(i, 0));
      }
      for (std::size_t b = first; b < rs.positive_roots.size(); ++b) {
        for (int j = off; j < off + n; ++j) {
          const RootVec beta = rs.positive_roots[b];
          if (beta == rs.simple_roots[j]) continue;
          Scalar pair(0);
          for (int i = off; i < off + n; ++i) {
            if (!beta[i].is_zero()) pair += beta[i] * cartan_[j][i];
          }
          if (pair.is_zero()) continue;
          RootVec img = beta;
          img[j] -= pair;
          auto [it, fresh] = index.emplace(img, static_cast<int>(rs.positive_roots.size()));
          if (fresh) {
            rs.positive_roots.push_back(img);
            Elem t = root_refl[b];
            root_refl.push_back(g.left_mult(j, g.right_mult(t, j)));
          }
        }
      }
    }
    if (rs.positive_roots.size() != g.reflections_.size()) {
      throw Error("internal: " + std::to_string(rs.positive_roots.size()) + " positive roots vs " +
                  std::to_string(g.reflections_.size()) + " reflections");
    }
    rs.root_to_reflection.resize(root_refl.size());
    rs.reflection_to_root.assign(root_refl.size(), -1);
    for (std::size_t r = 0; r < root_refl.size(); ++r) {
      int idx = g.refl_index_[root_refl[r]];
      if (idx < 0 || rs.reflection_to_root[idx] != -1) throw Error("internal: root/reflection map");
      rs.root_to_reflection[r] = idx;
      rs.reflection_to_root[idx] = static_cast<int>(r);
    }
  }

  void bruhat_graph() {
    auto& g = *g_;
    const Elem n = g.size();
    std::vector<std::vector<BruhatEdge>> up(n), down(n);
    for (Elem u = 0; u < n; ++u) {
      for (int r = 0; r < g.num_reflections(); ++r) {
        Elem v = g.multiply(g.reflections_[r], u);
        if (g.length(v) > g.length(u)) {
          up[u].push_back({v, r});
          down[v].push_back({u, r});
        }
      }
    }
    auto pack = [n](std::vector<std::vector<BruhatEdge>>& lists, std::vector<std::size_t>& off,
                    std::vector<BruhatEdge>& flat) {
      off.assign(n + 1, 0);
      for (Elem u = 0; u < n; ++u) off[u + 1] = off[u] + lists[u].size();
      flat.reserve(off[n]);
      for (Elem u = 0; u < n; ++u) {
        std::sort(lists[u].begin(), lists[u].end(),
                  [](const BruhatEdge& a, const BruhatEdge& b) { return a.target < b.target; });
        flat.insert(flat.end(), lists[u].begin(), lists[u].end());
        std::vector<BruhatEdge>().swap(lists[u]);
      }
    };
    pack(up, g.up_off_, g.up_);
    pack(down, g.down_off_, g.down_);
  }

  const Diagram& d_;
  BuildOptions opts_;
  int rank_ = 0;
  std::shared_ptr<CoxeterGroup> g_;
  std::vector<std::vector<Scalar>> cartan_;
  std::vector<bool> combinatorial_;
  std::vector<int> len_;
  std::vector<Elem> left_;
};

std::shared_ptr<const CoxeterGroup> CoxeterGroup::build(const Diagram& diagram,
                                                        const BuildOptions& opts) {
  return GroupBuilder(diagram, opts).run();
}

std::shared_ptr<const CoxeterGroup> CoxeterGroup::build(std::string_view diagram,
                                                        const BuildOptions& opts) {
  return build(Diagram::parse(diagram), opts);
}

Elem CoxeterGroup::multiply(Elem a, Elem b) const {
  auto word = normal_form(a);
  Elem x = b;
  for (auto it = word.rbegin(); it != word.rend(); ++it) x = left_mult(*it, x);
  return x;
}

Elem CoxeterGroup::from_word(std::span<const int> word) const {
  Elem x = identity();
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 0 || *it >= rank_) throw IndexOutOfRange("generator index out of range");
    x = left_mult(*it, x);
  }
  return x;
}

int CoxeterGroup::edge_label(Elem u, Elem v) const {
  auto edges = up_edges(u);
  auto it = std::lower_bound(edges.begin(), edges.end(), v,
                             [](const BruhatEdge& e, Elem t) { return e.target < t; });
  if (it == edges.end() || it->target != v) return -1;
  return it->refl;
}

bool CoxeterGroup::leq(Elem u, Elem v) const {
  while (true) {
    if (u == v) return true;
    if (length(u) >= length(v)) return false;
    if (u == identity()) return true;
    int s = normal_form(v)[0];  // a left descent of v
    Elem su = left_mult(s, u);
    if (length(su) < length(u)) u = su;
    v = left_mult(s, v);
  }
}

std::vector<Elem> CoxeterGroup::interval(Elem u, Elem v) const {
  std::vector<Elem> out;
  if (!leq(u, v)) return out;
  std::vector<char> seen(size(), 0);
  seen[u] = 1;
  out.push_back(u);
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& e : up_edges(out[i])) {
      if (seen[e.target] || length(e.target) != length(out[i]) + 1) continue;
      if (!leq(e.target, v)) continue;
      seen[e.target] = 1;
      out.push_back(e.target);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool CoxeterGroup::is_type_a() const {
  return diagram_.irreducible() && diagram_.factors()[0].family == Family::A;
}

std::string format_word(std::span<const int> word) {
  if (word.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += 's' + std::to_string(word[i] + 1);
  }
  return out;
}

std::string CoxeterGroup::format_word(Elem w) const { return bflip::format_word(normal_form(w)); }

std::string CoxeterGroup::format_permutation(Elem w) const {
  if (!is_type_a()) throw UnsupportedDiagram("one-line notation needs a type A group");
  std::string p;
  for (int i = 0; i <= rank_; ++i) p += static_cast<char>('1' + i);
  for (int s : normal_form(w)) std::swap(p[s], p[s + 1]);
  return p;
}

std::string CoxeterGroup::format(Elem w) const {
  return is_type_a() ? format_permutation(w) : format_word(w);
}

Elem CoxeterGroup::parse(std::string_view text) const {
  std::string t(text);
  auto trim = [](std::string& s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    s.erase(0, i);
  };
  trim(t);
  if (t.empty()) throw ParseError("empty element");
  if (t == "e" || t == "id" || t == "1") return identity();
  bool digits = std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  if (digits) {
    if (!is_type_a()) throw ParseError("one-line notation '" + t + "' needs a type A group");
    int n = rank_ + 1;
    if (static_cast<int>(t.size()) != n) {
      throw ParseError("permutation '" + t + "' must have " + std::to_string(n) + " letters");
    }
    std::vector<int> p(n);
    std::vector<char> used(n + 1, 0);
    for (int i = 0; i < n; ++i) {
      p[i] = t[i] - '0';
      if (p[i] < 1 || p[i] > n || used[p[i]]) throw ParseError("'" + t + "' is not a permutation");
      used[p[i]] = 1;
    }
    std::vector<int> word;
    for (bool changed = true; changed;) {
      changed = false;
      for (int i = 0; i + 1 < n; ++i) {
        if (p[i] > p[i + 1]) {
          std::swap(p[i], p[i + 1]);
          word.push_back(i);
          changed = true;
          break;
        }
      }
    }
    std::reverse(word.begin(), word.end());
    return from_word(word);
  }
  std::vector<int> word;
  std::size_t i = 0;
  while (i < t.size()) {
    char c = t[i];
    if (std::isspace(static_cast<unsigned char>(c)) || c == ',' || c == '*' || c == '.') {
      ++i;
      continue;
    }
    if (c != 's' && c != 'S') throw ParseError("bad element '" + t + "'");
    ++i;
    std::size_t start = i;
    while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
    if (start == i || i - start > 3) throw ParseError("bad generator in '" + t + "'");
    int s = std::stoi(t.substr(start, i - start));
    if (s < 1 || s > rank_) throw ParseError("generator s" + std::to_string(s) + " out of range");
    word.push_back(s - 1);
  }
  return from_word(word);
}

const std::vector<std::uint64_t>& BruhatDownSets::down(Elem v) {
  if (memo_.empty()) memo_.resize(g_->size());
  auto& slot = memo_[v];
  if (!slot.empty()) return slot;
  std::vector<std::uint64_t> bits((g_->size() + 63) / 64, 0);
  bits[v / 64] |= 1ULL << (v % 64);
  for (const auto& e : g_->down_edges(v)) {
    if (g_->length(e.target) + 1 != g_->length(v)) continue;
    const auto& sub = down(e.target);
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] |= sub[i];
  }
  memo_[v] = std::move(bits);
  return memo_[v];
}

bool BruhatDownSets::leq(Elem u, Elem v) {
  const auto& d = down(v);
  return (d[u / 64] >> (u % 64)) & 1ULL;
}

}  // namespace bflip
