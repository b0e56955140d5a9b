#include <doctest.h>

#include <random>

#include "bruhat_flip/csort.hpp"
#include "bruhat_flip/time_support.hpp"
#include "bruhat_flip/verifier.hpp"

using namespace bflip;

namespace {

Flipclass only_flipclass(const CoxeterGroup& g, int h) {
  FlipCache cache(g);
  auto fs = enumerate_flipclasses(cache, 0, h, default_ordering(g));
  for (auto& f : fs) {
    if (f.v == g.w0()) return f;
  }
  return {};
}

}  // namespace

TEST_CASE("valence polynomials of the smallest flipclasses") {
  auto a1 = CoxeterGroup::build("A1");
  CHECK(valence_polynomial(only_flipclass(*a1, 1)).to_string() == "x^2 + 2*y");
  auto a1a1 = CoxeterGroup::build("A1xA1");
  CHECK(valence_polynomial(only_flipclass(*a1a1, 2)).to_string() == "x^4 + 4*x^2*y + 4*y^2");
}

TEST_CASE("time support of a diamond") {
  auto g = CoxeterGroup::build("A1xA1");
  auto ts = TimeSupport::of(only_flipclass(*g, 2), g.get());
  CHECK(ts.size() == 4);
  CHECK(ts.edges().size() == 4);
  CHECK(ts.leq(ts.source(), ts.sink()));
  CHECK(!ts.leq(1, 2));
  for (const auto& e : ts.edges()) CHECK(e.label >= 0);
}

TEST_CASE("coefficients of the valence polynomial count comparable pairs") {
  auto g = CoxeterGroup::build("B3");
  auto ord = default_ordering(*g);
  auto s = sweep(*g, 3, ord, std::vector<int>{0, 1, 2});
  for (const auto& e : s.entries) {
    auto ts = TimeSupport::of(e.flipclass);
    mpz_class pairs = 0;
    for (int a = 0; a < ts.size(); ++a) {
      for (int b = 0; b < ts.size(); ++b) pairs += ts.leq(a, b);
    }
    mpz_class sum = 0;
    for (const auto& [exp, c] : e.valence.terms()) sum += c;
    CHECK(sum == pairs);
    // Only the pair (source, sink) sees no lower cover of a and no upper cover of b.
    CHECK(e.valence.coeff(e.valence.deg_x(), 0) >= 1);
  }
}

TEST_CASE("valence polynomials are multiplicative on products") {
  std::vector<std::pair<std::string, int>> small{{"A1", 1}, {"A2", 2}, {"A2", 3}, {"B2", 2}, {"G2", 2}};
  for (const auto& [n1, h1] : small) {
    for (const auto& [n2, h2] : small) {
      if (h1 + h2 > 5) continue;
      auto g1 = CoxeterGroup::build(n1), g2 = CoxeterGroup::build(n2);
      FlipCache c1(*g1), c2(*g2);
      auto f1 = enumerate_flipclasses(c1, 0, h1, default_ordering(*g1));
      auto f2 = enumerate_flipclasses(c2, 0, h2, default_ordering(*g2));
      auto prod = product_group(*g1, *g2);
      auto ord = default_ordering(*prod);
      FlipCache cp(*prod);
      for (std::size_t i = 0; i < f1.size() && i < 2; ++i) {
        for (std::size_t j = 0; j < f2.size() && j < 2; ++j) {
          Flipclass f = shuffle_product(*prod, *g1, f1[i], *g2, f2[j]);
          CHECK(is_flipclass(cp, f));
          CHECK(valence_polynomial(f) == valence_polynomial(f1[i]) * valence_polynomial(f2[j]));
          CHECK(count_increasing(*prod, f, ord) ==
                count_increasing(*g1, f1[i], default_ordering(*g1)) *
                    count_increasing(*g2, f2[j], default_ordering(*g2)));
        }
      }
    }
  }
}

TEST_CASE("the pure x^4 term marks dihedral flipclasses") {
  for (auto [name, h] : std::vector<std::pair<const char*, int>>{{"G2", 2}, {"B3", 2}, {"B3", 3}, {"A4", 3}, {"A4", 4}}) {
    CAPTURE(name);
    CAPTURE(h);
    auto g = CoxeterGroup::build(name);
    SweepOptions so;
    so.reduce_length = false;
    so.reduce_csort = false;
    auto s = sweep(*g, h, default_ordering(*g), diagram_coxeter_element(*g), so);
    int mismatches = 0;
    for (const auto& e : s.entries) {
      mismatches += has_x4_monomial(e.valence) != flipclass_info(*g, e.flipclass).is_dihedral;
    }
    CHECK(mismatches == 0);
  }
}

TEST_CASE("the pure y^4 term does not mark dihedral flipclasses") {
  // The diamond is dihedral with no y^4 term.
  const BiPoly diamond = BiPoly::parse("x^2 + 2*y") * BiPoly::parse("x^2 + 2*y");
  CHECK(!has_y4_monomial(diamond));
  // A non-dihedral B3 3-flipclass with a y^4 term.
  auto g = CoxeterGroup::build("B3");
  auto s = sweep(*g, 3, default_ordering(*g), diagram_coxeter_element(*g));
  bool found = false;
  for (const auto& e : s.entries) {
    found = found || (has_y4_monomial(e.valence) && !flipclass_info(*g, e.flipclass).is_dihedral);
  }
  CHECK(found);
}
