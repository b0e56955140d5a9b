#include <doctest.h>

#include <string>
#include <vector>

#include "bruhat_flip/errors.hpp"
#include "bruhat_flip/group.hpp"

using namespace bflip;

namespace {

std::vector<int> permutation(const CoxeterGroup& g, Elem w) {
  std::vector<int> p;
  for (char ch : g.format_permutation(w)) p.push_back(ch - '0');
  return p;
}

// Tableau criterion for the Bruhat order on permutations.
bool tableau_leq(const std::vector<int>& u, const std::vector<int>& v) {
  const int n = static_cast<int>(u.size());
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int cu = 0, cv = 0;
      for (int a = 0; a < i; ++a) {
        cu += u[a] >= j;
        cv += v[a] >= j;
      }
      if (cu > cv) return false;
    }
  }
  return true;
}

// Subword property over a fixed reduced word of v.
bool subword_leq(const CoxeterGroup& g, Elem u, Elem v) {
  auto nf = g.normal_form(v);
  const int l = static_cast<int>(nf.size());
  for (unsigned mask = 0; mask < (1u << l); ++mask) {
    if (__builtin_popcount(mask) != g.length(u)) continue;
    std::vector<int> word;
    for (int i = 0; i < l; ++i) {
      if (mask >> i & 1u) word.push_back(nf[i]);
    }
    if (g.from_word(word) == u) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("group orders, reflections and longest element") {
  struct Known {
    const char* name;
    int order;
    int reflections;
  };
  for (auto k : {Known{"A1", 2, 1}, Known{"A3", 24, 6}, Known{"A4", 120, 10}, Known{"B3", 48, 9},
                 Known{"B4", 384, 16}, Known{"D4", 192, 12}, Known{"F4", 1152, 24}, Known{"G2", 12, 6},
                 Known{"H3", 120, 15}, Known{"H4", 14400, 60}, Known{"I2(7)", 14, 7}, Known{"I2(8)", 16, 8},
                 Known{"A2xA1", 12, 4}, Known{"E6", 51840, 36}}) {
    CAPTURE(k.name);
    auto g = CoxeterGroup::build(k.name);
    CHECK(g->size() == k.order);
    CHECK(static_cast<unsigned long long>(g->size()) == g->diagram().predicted_order());
    CHECK(g->num_reflections() == k.reflections);
    CHECK(g->max_length() == k.reflections);
    CHECK(static_cast<int>(g->up_edges(CoxeterGroup::identity()).size()) == k.reflections);
  }
}

TEST_CASE("group laws") {
  for (auto name : {"B3", "H3", "I2(5)", "A2xA1"}) {
    CAPTURE(name);
    auto g = CoxeterGroup::build(name);
    for (Elem w = 0; w < g->size(); ++w) {
      CHECK(g->multiply(w, g->inverse(w)) == CoxeterGroup::identity());
      CHECK(g->length(g->inverse(w)) == g->length(w));
      CHECK(g->length(g->multiply(g->w0(), w)) == g->max_length() - g->length(w));
      CHECK(g->from_word(g->normal_form(w)) == w);
    }
    CHECK(g->multiply(g->w0(), g->w0()) == CoxeterGroup::identity());
  }
}

TEST_CASE("ids are sorted by length") {
  auto g = CoxeterGroup::build("D4");
  for (Elem w = 1; w < g->size(); ++w) CHECK(g->length(w - 1) <= g->length(w));
}

TEST_CASE("Bruhat order agrees with the tableau criterion in type A") {
  for (auto name : {"A3", "A4"}) {
    auto g = CoxeterGroup::build(name);
    std::vector<std::vector<int>> perms;
    for (Elem w = 0; w < g->size(); ++w) perms.push_back(permutation(*g, w));
    int mismatches = 0;
    for (Elem u = 0; u < g->size(); ++u) {
      for (Elem v = 0; v < g->size(); ++v) mismatches += g->leq(u, v) != tableau_leq(perms[u], perms[v]);
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("Bruhat order agrees with the subword property") {
  for (auto name : {"B3", "G2", "H3", "A2xA1"}) {
    CAPTURE(name);
    auto g = CoxeterGroup::build(name);
    int mismatches = 0;
    for (Elem u = 0; u < g->size(); ++u) {
      for (Elem v = 0; v < g->size(); ++v) mismatches += g->leq(u, v) != subword_leq(*g, u, v);
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("memoized down-sets agree with the descent recursion") {
  auto g = CoxeterGroup::build("D4");
  BruhatDownSets down(g);
  int mismatches = 0;
  for (Elem u = 0; u < g->size(); ++u) {
    for (Elem v = 0; v < g->size(); ++v) mismatches += g->leq(u, v) != down.leq(u, v);
  }
  CHECK(mismatches == 0);
}

TEST_CASE("Bruhat edges are labelled by the reflection taking source to target") {
  auto g = CoxeterGroup::build("B3");
  for (Elem u = 0; u < g->size(); ++u) {
    for (const auto& e : g->up_edges(u)) {
      CHECK(g->multiply(g->reflection(e.refl), u) == e.target);
      CHECK(g->length(e.target) > g->length(u));
      CHECK((g->length(e.target) - g->length(u)) % 2 == 1);
      CHECK(g->edge_label(u, e.target) == e.refl);
    }
    for (const auto& e : g->down_edges(u)) CHECK(g->edge_label(e.target, u) == e.refl);
  }
}

TEST_CASE("intervals") {
  auto g = CoxeterGroup::build("A3");
  Elem u = g->parse("1234"), v = g->parse("4231");
  auto iv = g->interval(u, v);
  CHECK(iv.front() == u);
  CHECK(iv.back() == v);
  for (Elem x : iv) CHECK((g->leq(u, x) && g->leq(x, v)));
  CHECK(g->interval(v, u).empty());
  CHECK(g->interval(CoxeterGroup::identity(), g->w0()).size() == 24);
}

TEST_CASE("element parsing and formatting") {
  auto a3 = CoxeterGroup::build("A3");
  for (Elem w = 0; w < a3->size(); ++w) {
    CHECK(a3->parse(a3->format(w)) == w);
    CHECK(a3->parse(a3->format_word(w)) == w);
  }
  CHECK(a3->format(a3->parse("4231")) == "4231");
  CHECK(a3->parse("e") == CoxeterGroup::identity());
  CHECK(a3->format(CoxeterGroup::identity()) == "1234");
  CHECK(a3->parse("s1 s2 s3 s2 s1") == a3->parse("4231"));
  auto b3 = CoxeterGroup::build("B3");
  for (Elem w = 0; w < b3->size(); ++w) CHECK(b3->parse(b3->format(w)) == w);
  CHECK(b3->parse("s1s2s1") == b3->parse("s1 s2 s1"));
  CHECK_THROWS_AS(a3->parse("1224"), ParseError);
  CHECK_THROWS_AS(a3->parse("s7"), ParseError);
  CHECK_THROWS_AS(b3->parse("123"), ParseError);
}

TEST_CASE("diagram errors and caps") {
  CHECK_THROWS_AS(CoxeterGroup::build("Q3"), ParseError);
  CHECK_THROWS_AS(CoxeterGroup::build("E5"), UnsupportedDiagram);
  BuildOptions small;
  small.max_elements = 1000;
  CHECK_THROWS_AS(CoxeterGroup::build("E7", small), CapExceeded);
  CHECK_THROWS_AS(CoxeterGroup::build("A9"), Error);
}

TEST_CASE("dihedral groups without a rational realization") {
  for (int m : {7, 8, 9, 12}) {
    auto g = CoxeterGroup::build("I2(" + std::to_string(m) + ")");
    CHECK(g->size() == 2 * m);
    CHECK(g->max_length() == m);
    // Every pair u < v is comparable unless they have the same length.
    for (Elem u = 0; u < g->size(); ++u) {
      for (Elem v = 0; v < g->size(); ++v) {
        if (g->length(u) < g->length(v)) CHECK(g->leq(u, v));
      }
    }
  }
}
