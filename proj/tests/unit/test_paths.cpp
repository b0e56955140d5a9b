#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "bruhat_flip/errors.hpp"
#include "bruhat_flip/flipclass.hpp"
#include "bruhat_flip/path.hpp"

using namespace bflip;

TEST_CASE("middle vertices come in pairs and flips are involutions") {
  for (auto name : {"A3", "B3", "H3"}) {
    CAPTURE(name);
    auto g = CoxeterGroup::build(name);
    FlipCache cache(*g);
    for (Elem a = 0; a < g->size(); ++a) {
      std::set<Elem> two_up;
      for (const auto& e : g->up_edges(a)) {
        for (const auto& f : g->up_edges(e.target)) two_up.insert(f.target);
      }
      for (Elem b : two_up) {
        const auto& mids = cache.middles(a, b);
        CHECK(mids.size() % 2 == 0);
        for (Elem x : mids) {
          Elem y = cache.flip2(a, x, b);
          CHECK(y != x);
          CHECK(cache.flip2(a, y, b) == x);
        }
      }
    }
  }
}

TEST_CASE("B3 pairing of 2-paths from e to prsrps") {
  auto g = CoxeterGroup::build("B3");
  FlipCache cache(*g);
  Elem v = g->parse("s1 s2 s3 s2 s1 s3");
  const auto& mids = cache.middles(CoxeterGroup::identity(), v);
  REQUIRE(mids.size() == 4);
  std::vector<int> lengths;
  for (Elem x : mids) lengths.push_back(g->length(x));
  CHECK(lengths == std::vector<int>{1, 3, 5, 5});
  CHECK(cache.flip2(0, g->parse("s3"), v) == g->parse("s1 s2 s1"));
  CHECK(cache.flip2(0, g->parse("s3 s1 s2 s1 s3"), v) == g->parse("s1 s2 s3 s2 s1"));
}

TEST_CASE("flipclasses partition the paths of an interval") {
  auto g = CoxeterGroup::build("B3");
  auto ord = default_ordering(*g);
  FlipCache cache(*g);
  std::mt19937 rng(5);
  for (int trial = 0; trial < 30; ++trial) {
    Elem u = static_cast<Elem>(rng() % g->size());
    Elem v = static_cast<Elem>(rng() % g->size());
    if (!g->leq(u, v) || u == v) continue;
    const int d = g->length(v) - g->length(u);
    for (int h = d % 2 == 0 ? 2 : 1; h <= d; h += 2) {
      auto paths = enumerate_paths(*g, u, v, h);
      std::set<std::vector<Elem>> all;
      for (const auto& p : paths) {
        CHECK(is_path(*g, p.x));
        all.insert(p.x);
      }
      std::set<std::vector<Elem>> covered;
      std::size_t total = 0;
      EnumerateOptions eo;
      for (const auto& f : enumerate_flipclasses(cache, u, h, ord, eo)) {
        if (f.v != v) continue;
        CHECK(is_flipclass(cache, f));
        total += f.size();
        for (std::size_t i = 0; i < f.size(); ++i) {
          auto p = f.path(i);
          covered.emplace(p.begin(), p.end());
        }
      }
      CHECK(total == all.size());
      CHECK(covered == all);
    }
  }
}

TEST_CASE("every flipclass has an increasing path for several orderings") {
  auto g = CoxeterGroup::build("B3");
  FlipCache cache(*g);
  auto base = default_ordering(*g);
  std::mt19937_64 rng(9);
  std::vector<ReflectionOrdering> ords{base, base.reversed()};
  for (int i = 0; i < 3; ++i) ords.push_back(reflection_ordering_from_word(*g, random_w0_word(*g, rng)));
  for (Elem u : {Elem{0}, Elem{3}, Elem{7}}) {
    for (const auto& f : enumerate_flipclasses(cache, u, 3, base)) {
      for (const auto& o : ords) CHECK(count_increasing(*g, f, o) >= 1);
    }
  }
}

TEST_CASE("flip index errors") {
  auto g = CoxeterGroup::build("A2");
  FlipCache cache(*g);
  auto paths = enumerate_paths(*g, 0, g->w0(), 3);
  REQUIRE(!paths.empty());
  CHECK_THROWS_AS(flip_i(cache, paths[0], 0), IndexOutOfRange);
  CHECK_THROWS_AS(flip_i(cache, paths[0], 3), IndexOutOfRange);
  CHECK(flip_i(cache, flip_i(cache, paths[0], 1), 1) == paths[0]);
}

TEST_CASE("path caps") {
  auto g = CoxeterGroup::build("B4");
  CHECK_THROWS_AS(enumerate_paths(*g, 0, g->w0(), 6, 100), CapExceeded);
}

TEST_CASE("flipclass metadata") {
  auto g = CoxeterGroup::build("A3");
  FlipCache cache(*g);
  auto ord = default_ordering(*g);
  Elem v = g->parse("4231");
  std::map<int, int> dims;
  for (int h : {1, 3, 5}) {
    for (const auto& f : enumerate_flipclasses(cache, 0, h, ord)) {
      if (f.v != v) continue;
      auto info = flipclass_info(*g, f);
      // The span of one path equals the span of all labels.
      auto labels = path_labels(*g, f.path(0));
      CHECK(span_rank(*g, labels) == info.span_dim);
      dims[h] = info.span_dim;
    }
  }
  CHECK(dims[1] == 1);
  CHECK(dims[3] == 2);
  CHECK(dims[5] == 3);
}

TEST_CASE("w0 transforms are involutions") {
  auto g = CoxeterGroup::build("B3");
  FlipCache cache(*g);
  auto ord = default_ordering(*g);
  for (const auto& f : enumerate_flipclasses(cache, 2, 3, ord)) {
    for (auto var : {W0Variant::right, W0Variant::left, W0Variant::conj}) {
      Flipclass t = w0_transform(*g, f, var);
      CHECK(is_flipclass(cache, t));
      CHECK(w0_transform(*g, t, var) == f);
    }
  }
}
