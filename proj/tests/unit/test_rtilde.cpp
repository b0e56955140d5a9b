#include <doctest.h>

#include <random>

#include "bruhat_flip/dihedral.hpp"
#include "bruhat_flip/path.hpp"
#include "bruhat_flip/rtilde.hpp"

using namespace bflip;

TEST_CASE("QPoly formatting and arithmetic") {
  QPoly p = QPoly::monomial(5) + QPoly::monomial(3, 2) + QPoly::monomial(1);
  CHECK(p.to_string() == "q^5 + 2q^3 + q");
  CHECK(QPoly{}.to_string() == "0");
  CHECK(QPoly::constant(1).to_string() == "1");
  CHECK((p - p).is_zero());
  CHECK((QPoly::monomial(1) * QPoly::monomial(2)).to_string() == "q^3");
  CHECK(p.truncated(4).to_string() == "2q^3 + q");
  CHECK(QPoly::monomial(1, -1).to_string() == "-q");
}

TEST_CASE("A3 interval [1234, 4231]") {
  auto g = CoxeterGroup::build("A3");
  Elem u = g->parse("1234"), v = g->parse("4231");
  CHECK(rtilde_recurrence(*g, u, v).to_string() == "q^5 + 2q^3 + q");
  CHECK(rtilde_dyer(*g, u, v, default_ordering(*g)).to_string() == "q^5 + 2q^3 + q");
  CHECK(rtilde_recurrence(*g, u, u).to_string() == "1");
  CHECK(rtilde_recurrence(*g, v, u).is_zero());
}

TEST_CASE("coefficients count increasing paths") {
  auto g = CoxeterGroup::build("B3");
  auto ord = default_ordering(*g);
  std::mt19937 rng(1);
  for (int t = 0; t < 40; ++t) {
    Elem u = static_cast<Elem>(rng() % g->size());
    Elem v = static_cast<Elem>(rng() % g->size());
    if (!g->leq(u, v)) continue;
    QPoly r = rtilde_dyer(*g, u, v, ord);
    const int d = g->length(v) - g->length(u);
    for (int h = 0; h <= d; ++h) {
      std::int64_t n = 0;
      if (h > 0) {
        for (const auto& p : enumerate_paths(*g, u, v, h)) n += ord.is_increasing(path_labels(*g, p.x));
      } else {
        n = u == v;
      }
      CHECK(r.coeff(h) == n);
    }
  }
}

TEST_CASE("shape of R-tilde") {
  auto g = CoxeterGroup::build("H3");
  RTildeRecurrence rec(*g);
  for (Elem u = 0; u < g->size(); u += 3) {
    for (Elem v = 0; v < g->size(); ++v) {
      if (!g->leq(u, v)) continue;
      const QPoly& r = rec(u, v);
      const int d = g->length(v) - g->length(u);
      CHECK(r.degree() == d);
      CHECK(r.coeff(d) == 1);
      for (int i = 0; i <= d; ++i) {
        if ((d - i) % 2 != 0) CHECK(r.coeff(i) == 0);
        CHECK(r.coeff(i) >= 0);
      }
    }
  }
}

TEST_CASE("inversion formula") {
  // sum over u <= z <= v of (-1)^(l(z)-l(u)) R~(u,z) R~(z,v) vanishes for u < v.
  for (auto name : {"A3", "B3", "G2"}) {
    CAPTURE(name);
    auto g = CoxeterGroup::build(name);
    RTildeRecurrence rec(*g);
    for (Elem u = 0; u < g->size(); ++u) {
      for (Elem v = u + 1; v < g->size(); ++v) {
        if (!g->leq(u, v)) continue;
        QPoly sum;
        for (Elem z : g->interval(u, v)) {
          QPoly term = rec(u, z) * rec(z, v);
          if ((g->length(z) - g->length(u)) % 2) sum -= term;
          else sum += term;
        }
        CHECK(sum.is_zero());
      }
    }
  }
}

TEST_CASE("recurrence and Dyer agree under random orderings") {
  std::mt19937_64 rng(2);
  for (auto name : {"A3", "G2", "H3"}) {
    CAPTURE(name);
    auto g = CoxeterGroup::build(name);
    auto ord = reflection_ordering_from_word(*g, random_w0_word(*g, rng));
    RTildeRecurrence rec(*g);
    for (Elem u = 0; u < g->size(); u += 5) {
      for (Elem v = 0; v < g->size(); v += 2) {
        if (g->leq(u, v)) CHECK(rtilde_dyer(*g, u, v, ord) == rec(u, v));
      }
    }
  }
}

TEST_CASE("dihedral closed forms") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(3, 5) == 0);
  CHECK(odd_compositions(5, 3) == std::vector<std::vector<int>>{{1, 1, 3}, {1, 3, 1}, {3, 1, 1}});
  CHECK(dihedral_flipclass_count(7, 3) == 6);
  CHECK(dihedral_rtilde(4).to_string() == "q^4 + 2q^2");
  CHECK(dihedral_rtilde(1).to_string() == "q");
  for (int d = 1; d <= 9; ++d) {
    for (int h = 1; h <= d; ++h) {
      CHECK(odd_compositions(d, h).size() == dihedral_flipclass_count(d, h));
    }
  }
}
