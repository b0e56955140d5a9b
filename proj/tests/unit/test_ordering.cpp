#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "bruhat_flip/csort.hpp"
#include "bruhat_flip/errors.hpp"
#include "bruhat_flip/reflection_order.hpp"

using namespace bflip;

TEST_CASE("orderings from reduced words of w0 are reflection orderings") {
  std::mt19937_64 rng(7);
  for (auto name : {"A3", "B3", "G2", "H3", "D4", "A2xA1"}) {
    CAPTURE(name);
    auto g = CoxeterGroup::build(name);
    auto def = default_ordering(*g);
    CHECK(static_cast<int>(def.order.size()) == g->num_reflections());
    CHECK(validate_reflection_ordering(*g, def));
    CHECK(validate_reflection_ordering(*g, def.reversed()));
    for (int i = 0; i < 5; ++i) {
      auto word = random_w0_word(*g, rng);
      CHECK(static_cast<int>(word.size()) == g->max_length());
      auto ord = reflection_ordering_from_word(*g, word);
      std::set<int> seen(ord.order.begin(), ord.order.end());
      CHECK(static_cast<int>(seen.size()) == g->num_reflections());
      CHECK(validate_reflection_ordering(*g, ord));
    }
  }
}

TEST_CASE("the first and last reflections of an ordering are simple") {
  auto g = CoxeterGroup::build("B3");
  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    auto word = random_w0_word(*g, rng);
    auto ord = reflection_ordering_from_word(*g, word);
    CHECK(ord.order.front() == g->simple_reflection(word.front()));
    CHECK(g->length(g->reflection(ord.order.back())) == 1);
  }
}

TEST_CASE("shuffled orders are rejected") {
  auto g = CoxeterGroup::build("B3");
  std::mt19937_64 rng(11);
  int rejected = 0;
  for (int i = 0; i < 20; ++i) {
    std::vector<int> order(g->num_reflections());
    for (int r = 0; r < g->num_reflections(); ++r) order[r] = r;
    std::shuffle(order.begin(), order.end(), rng);
    rejected += !validate_reflection_ordering(*g, ReflectionOrdering::from_sequence(order));
  }
  CHECK(rejected >= 19);
}

TEST_CASE("bad words") {
  auto g = CoxeterGroup::build("A2");
  std::vector<int> not_reduced{0, 0, 1};
  std::vector<int> too_short{0, 1};
  CHECK_THROWS_AS(reflection_ordering_from_word(*g, not_reduced), NotReduced);
  CHECK_THROWS_AS(reflection_ordering_from_word(*g, too_short), NotLongestElement);
}

TEST_CASE("dihedral reflection subgroups") {
  auto g = CoxeterGroup::build("B3");
  const int n = g->num_reflections();
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      std::vector<int> gens{a, b};
      auto refl = reflection_subgroup_reflections(*g, gens);
      auto generators = chi(*g, refl);
      CHECK(generators.size() == 2);
      auto chain = dihedral_chain(*g, a, b);
      CHECK(chain.size() == refl.size());
      CHECK(std::find(chain.begin(), chain.end(), a) != chain.end());
      CHECK(std::find(chain.begin(), chain.end(), b) != chain.end());
      // A reflection ordering restricts to the chain or its reverse.
      auto ord = default_ordering(*g);
      std::vector<int> pos;
      for (int r : chain) pos.push_back(ord.rank[r]);
      bool up = std::is_sorted(pos.begin(), pos.end());
      bool down = std::is_sorted(pos.rbegin(), pos.rend());
      CHECK((up || down));
    }
  }
}

TEST_CASE("c-sorting order is a total order") {
  auto g = CoxeterGroup::build("B3");
  auto c = diagram_coxeter_element(*g);
  CHECK(csort_key(*g, CoxeterGroup::identity(), c).empty());
  for (Elem u = 0; u < g->size(); ++u) {
    auto key = csort_key(*g, u, c);
    CHECK(static_cast<int>(key.size()) == g->length(u));
    CHECK(std::is_sorted(key.begin(), key.end()));
    std::vector<int> word;
    for (int p : key) word.push_back(c[(p - 1) % c.size()]);
    CHECK(g->from_word(word) == u);
    for (Elem v = 0; v < g->size(); ++v) {
      if (u == v) continue;
      CHECK(csort_less(*g, u, v, c) != csort_less(*g, v, u, c));
    }
  }
}
