#include "bruhat_flip/csort.hpp"

#include <algorithm>

#include "bruhat_flip/errors.hpp"

namespace bflip {

std::vector<int> csort_key(const CoxeterGroup& g, Elem u, std::span<const int> c) {
  std::vector<int> key;
  if (c.empty()) {
    if (u != CoxeterGroup::identity()) throw Error("csort_key: empty Coxeter element");
    return key;
  }
  Elem w = u;
  int pos = 0;
  int idle = 0;  // letters read since the last recorded one
  while (w != CoxeterGroup::identity()) {
    int s = c[pos % c.size()];
    ++pos;
    Elem sw = g.left_mult(s, w);
    if (g.length(sw) < g.length(w)) {
      key.push_back(pos);
      w = sw;
      idle = 0;
    } else if (++idle > static_cast<int>(c.size())) {
      throw Error("csort_key: element uses generators outside the Coxeter element");
    }
  }
  return key;
}

bool csort_less(const CoxeterGroup& g, Elem u, Elem v, std::span<const int> c) {
  auto a = csort_key(g, u, c);
  auto b = csort_key(g, v, c);
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<int> diagram_coxeter_element(const CoxeterGroup& g) {
  std::vector<int> c(g.rank());
  for (int s = 0; s < g.rank(); ++s) c[s] = s;
  return c;
}

}  // namespace bflip
