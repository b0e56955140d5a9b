#include "bruhat_flip/reflection_order.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "bruhat_flip/errors.hpp"

namespace bflip {

ReflectionOrdering ReflectionOrdering::from_sequence(std::vector<int> order) {
  ReflectionOrdering o;
  o.rank.assign(order.size(), -1);
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (order[i] < 0 || order[i] >= static_cast<int>(order.size()) || o.rank[order[i]] != -1) {
      throw Error("reflection ordering is not a permutation");
    }
    o.rank[order[i]] = static_cast<int>(i);
  }
  o.order = std::move(order);
  return o;
}

ReflectionOrdering ReflectionOrdering::reversed() const {
  std::vector<int> rev(order.rbegin(), order.rend());
  return from_sequence(std::move(rev));
}

bool ReflectionOrdering::is_increasing(std::span<const int> labels) const {
  for (std::size_t i = 1; i < labels.size(); ++i) {
    if (rank[labels[i - 1]] > rank[labels[i]]) return false;
  }
  return true;
}

ReflectionOrdering reflection_ordering_from_word(const CoxeterGroup& g, std::span<const int> word) {
  std::vector<int> order;
  Elem prefix = CoxeterGroup::identity();
  for (std::size_t i = 0; i < word.size(); ++i) {
    int s = word[i];
    if (s < 0 || s >= g.rank()) throw IndexOutOfRange("generator index out of range");
    Elem next = g.right_mult(prefix, s);
    if (g.length(next) != static_cast<int>(i) + 1) {
      throw NotReduced("word is not reduced at position " + std::to_string(i + 1));
    }
    Elem t = g.multiply(next, g.inverse(prefix));
    order.push_back(g.reflection_index(t));
    prefix = next;
  }
  if (prefix != g.w0()) throw NotLongestElement("word does not multiply to w0");
  return ReflectionOrdering::from_sequence(std::move(order));
}

ReflectionOrdering default_ordering(const CoxeterGroup& g) {
  auto nf = g.normal_form(g.w0());
  return reflection_ordering_from_word(g, nf);
}

std::vector<int> reflection_subgroup_reflections(const CoxeterGroup& g,
                                                 std::span<const int> generators, std::size_t cap) {
  std::vector<char> seen(g.size(), 0);
  std::vector<Elem> elems{CoxeterGroup::identity()};
  seen[0] = 1;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    for (int r : generators) {
      Elem x = g.multiply(g.reflection(r), elems[i]);
      if (seen[x]) continue;
      seen[x] = 1;
      elems.push_back(x);
      if (elems.size() > cap) throw CapExceeded("reflection subgroup exceeds cap");
    }
  }
  std::vector<int> out;
  for (Elem x : elems) {
    int r = g.reflection_index(x);
    if (r >= 0) out.push_back(r);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> chi(const CoxeterGroup& g, std::span<const int> refl_set, std::size_t cap) {
  std::vector<int> sub = reflection_subgroup_reflections(g, refl_set, cap);
  std::vector<int> out;
  for (int t : sub) {
    Elem te = g.reflection(t);
    bool canonical = true;
    for (int r : sub) {
      if (r != t && g.length(g.multiply(g.reflection(r), te)) < g.length(te)) {
        canonical = false;
        break;
      }
    }
    if (canonical) out.push_back(t);
  }
  return out;
}

std::vector<int> dihedral_chain(const CoxeterGroup& g, int r1, int r2) {
  int pair[2] = {r1, r2};
  std::vector<int> gens = chi(g, pair);
  if (gens.size() == 1) return gens;
  if (gens.size() != 2) throw Error("internal: dihedral subgroup without two canonical generators");
  Elem a = g.reflection(gens[0]);
  Elem b = g.reflection(gens[1]);
  Elem ab = g.multiply(a, b);
  std::vector<int> chain;
  Elem c = a;
  while (true) {
    chain.push_back(g.reflection_index(c));
    if (c == b) break;
    c = g.multiply(ab, c);
    if (chain.size() > static_cast<std::size_t>(g.num_reflections())) {
      throw Error("internal: dihedral chain does not close");
    }
  }
  return chain;
}

bool validate_reflection_ordering(const CoxeterGroup& g, const ReflectionOrdering& ord) {
  const int n = g.num_reflections();
  if (static_cast<int>(ord.order.size()) != n) return false;
  std::set<std::vector<int>> done;
  for (int r1 = 0; r1 < n; ++r1) {
    for (int r2 = r1 + 1; r2 < n; ++r2) {
      std::vector<int> chain = dihedral_chain(g, r1, r2);
      std::vector<int> key = chain;
      std::sort(key.begin(), key.end());
      if (!done.insert(key).second) continue;
      bool up = true, down = true;
      for (std::size_t i = 1; i < chain.size(); ++i) {
        if (ord.rank[chain[i - 1]] > ord.rank[chain[i]]) up = false;
        if (ord.rank[chain[i - 1]] < ord.rank[chain[i]]) down = false;
      }
      if (!up && !down) return false;
    }
  }
  return true;
}

}  // namespace bflip
