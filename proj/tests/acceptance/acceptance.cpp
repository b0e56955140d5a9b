#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "bruhat_flip/csort.hpp"
#include "bruhat_flip/dihedral.hpp"
#include "bruhat_flip/errors.hpp"
#include "bruhat_flip/flipclass.hpp"
#include "bruhat_flip/rtilde.hpp"
#include "bruhat_flip/time_support.hpp"
#include "bruhat_flip/verifier.hpp"

using namespace bflip;

namespace {

struct Check {
  bool ok = true;
  void expect(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      std::cout << "    mismatch: " << what << "\n";
    }
  }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<ReflectionOrdering> orderings(const CoxeterGroup& g, int count, unsigned seed) {
  std::vector<ReflectionOrdering> out{default_ordering(g)};
  std::mt19937 rng(seed);
  for (int attempt = 0; static_cast<int>(out.size()) < count && attempt < 1000; ++attempt) {
    auto ord = reflection_ordering_from_word(g, random_w0_word(g, rng));
    bool seen = false;
    for (const auto& o : out) seen = seen || o == ord;
    if (!seen) out.push_back(std::move(ord));
  }
  return out;
}

SweepResult sweep_row(const std::string& name, int h, bool reduce = true) {
  auto g = CoxeterGroup::build(name);
  SweepOptions so;
  so.reduce_length = reduce;
  so.reduce_csort = reduce;
  auto s = sweep(*g, h, default_ordering(*g), diagram_coxeter_element(*g), so);
  s.diagram = name;
  return s;
}

std::vector<SweepResult> roster_sweeps;

// Published rows; the limit applies to the cumulative time up to the row.
struct ExpectedRow {
  StatsRow row;
  double limit;
};

bool table_rows(Check& ck) {
  const std::vector<ExpectedRow> expect{
      {{"A1", 1, 1, 1, 1, 1, 1}, 10},         {{"A2", 2, 1, 1, 1, 0, 0}, 10},
      {{"B2", 2, 3, 8, 1, 0, 0}, 10},         {{"G2", 2, 5, 25, 1, 0, 0}, 10},
      {{"A3", 3, 3, 15, 4, 3, 3}, 60},        {{"B3", 3, 16, 216, 8, 7, 4}, 60},
      {{"A4", 4, 16, 363, 11, 7, 7}, 300},    {{"B4", 4, 125, 11987, 206, 198, 191}, 7200},
      {{"D4", 4, 53, 2283, 19, 15, 0}, 7200},
  };
  auto t0 = Clock::now();
  for (const auto& e : expect) {
    roster_sweeps.push_back(sweep_row(e.row.type, e.row.h));
    const double t = seconds_since(t0);
    ck.expect(t < e.limit, e.row.type + " reached after " + std::to_string(t) + " s");
  }
  auto run = run_gamma(roster_sweeps);
  ck.expect(run.violations.empty(), "table run reports violations");
  ck.expect(run.rows.size() == expect.size(), "row count");
  for (std::size_t i = 0; i < run.rows.size() && i < expect.size(); ++i) {
    const auto& r = run.rows[i];
    const auto& x = expect[i].row;
    std::cout << "    " << r.type << " h=" << r.h << ": " << r.elements_to_check << ", " << r.flipclasses << ", "
              << r.valence_polynomials << ", " << r.irreducible_valence_polynomials << ", "
              << r.new_irreducible_valence_polynomials << "\n";
    ck.expect(r == x, "row " + x.type);
  }
  return ck.ok;
}

bool a3_example(Check& ck) {
  auto g = CoxeterGroup::build("A3");
  FlipCache cache(*g);
  auto ord = default_ordering(*g);
  Elem u = g->parse("1234"), v = g->parse("4231");
  std::map<int, std::vector<Flipclass>> by_h;
  for (int h = 1; h <= 5; ++h) {
    for (auto& f : enumerate_flipclasses(cache, u, h, ord)) {
      if (f.v == v) by_h[h].push_back(std::move(f));
    }
  }
  ck.expect(by_h[1].size() == 1 && by_h[3].size() == 2 && by_h[5].size() == 1, "flipclass multiset");
  ck.expect(by_h[2].empty() && by_h[4].empty(), "no even flipclasses");
  if (by_h[3].size() == 2) {
    for (const auto& f : by_h[3]) ck.expect(flipclass_info(*g, f).is_dihedral, "3-flipclass dihedral");
    FlipCache other(*g);
    ck.expect(comb_isomorphic(cache, by_h[3][0], other, by_h[3][1]), "3-flipclasses isomorphic");
  }
  for (const auto& [h, fs] : by_h) {
    for (const auto& f : fs) ck.expect(count_increasing(*g, f, ord) == 1, "c = 1 for h=" + std::to_string(h));
  }
  ck.expect(rtilde_recurrence(*g, u, v).to_string() == "q^5 + 2q^3 + q", "rtilde");
  return ck.ok;
}

bool b3_pairing(Check& ck) {
  auto g = CoxeterGroup::build("B3");
  FlipCache cache(*g);
  Elem v = g->parse("s1 s2 s3 s2 s1 s3");
  const auto& mids = cache.middles(CoxeterGroup::identity(), v);
  std::vector<int> lengths;
  for (Elem x : mids) lengths.push_back(g->length(x));
  ck.expect(lengths == std::vector<int>{1, 3, 5, 5}, "middle lengths");
  ck.expect(cache.flip2(0, g->parse("s3"), v) == g->parse("s1 s2 s1"), "s paired with prp");
  ck.expect(cache.flip2(0, g->parse("s3 s1 s2 s1 s3"), v) == g->parse("s1 s2 s3 s2 s1"),
            "sprps paired with prsrp");
  return ck.ok;
}

bool dyer_oracle(Check& ck) {
  auto compare = [&](const CoxeterGroup& g, Elem u, Elem v, const std::vector<ReflectionOrdering>& ords,
                     RTildeRecurrence& rec) {
    const QPoly& r = rec(u, v);
    for (const auto& o : ords) {
      if (!(rtilde_dyer(g, u, v, o) == r)) {
        ck.expect(false, g.format(u) + " " + g.format(v));
        return;
      }
    }
  };
  for (auto name : {"A3", "B3"}) {
    auto g = CoxeterGroup::build(name);
    auto ords = orderings(*g, 3, 11);
    ck.expect(ords.size() == 3, "three orderings");
    RTildeRecurrence rec(*g);
    for (Elem u = 0; u < g->size(); ++u) {
      for (Elem v = 0; v < g->size(); ++v) {
        if (g->leq(u, v)) compare(*g, u, v, ords, rec);
      }
    }
  }
  auto g = CoxeterGroup::build("A4");
  auto ords = orderings(*g, 3, 12);
  RTildeRecurrence rec(*g);
  std::mt19937 rng(13);
  int done = 0;
  while (done < 1000) {
    Elem u = static_cast<Elem>(rng() % g->size()), v = static_cast<Elem>(rng() % g->size());
    if (!g->leq(u, v)) continue;
    compare(*g, u, v, ords, rec);
    ++done;
  }
  return ck.ok;
}

bool ordering_independence(Check& ck) {
  std::vector<std::pair<std::string, int>> rows{{"B3", 1}, {"B3", 2}, {"B3", 3}, {"G2", 2}};
  for (const auto& [name, h] : rows) {
    auto g = CoxeterGroup::build(name);
    // A rank-2 group has exactly two orderings.
    const std::size_t want = g->rank() == 2 ? 2 : 5;
    auto ords = orderings(*g, 5, 21);
    ck.expect(ords.size() == want, std::to_string(want) + " orderings for " + name);
    auto s = sweep_row(name, h, false);
    std::size_t bad = 0;
    for (const auto& e : s.entries) {
      for (const auto& o : ords) bad += count_increasing(*g, e.flipclass, o) != e.c;
    }
    std::cout << "    " << name << " h=" << h << ": " << s.entries.size() << " flipclasses\n";
    ck.expect(bad == 0, name + " h=" + std::to_string(h) + " has ordering-dependent counts");
  }
  return ck.ok;
}

bool refinement(Check& ck) {
  auto v = verify_refinement(roster_sweeps);
  std::size_t total = 0;
  for (const auto& s : roster_sweeps) total += s.entries.size();
  std::cout << "    " << total << " pooled flipclasses, " << v.size() << " violations\n";
  ck.expect(!roster_sweeps.empty(), "pool is empty");
  ck.expect(v.empty(), "refinement violations");
  return ck.ok;
}

bool dihedral_theory(Check& ck) {
  for (int m = 3; m <= 8; ++m) {
    auto g = CoxeterGroup::build("I2(" + std::to_string(m) + ")");
    auto ord = default_ordering(*g);
    auto rev = ord.reversed();
    FlipCache cache(*g);
    for (Elem u = 0; u < g->size(); ++u) {
      for (int h = 1; h <= m; ++h) {
        std::map<Elem, std::size_t> count;
        for (const auto& f : enumerate_flipclasses(cache, u, h, ord)) {
          ++count[f.v];
          ck.expect(count_increasing(*g, f, ord) == 1, "one increasing path");
          ck.expect(count_increasing(*g, f, rev) == 1, "one decreasing path");
        }
        for (Elem v = 0; v < g->size(); ++v) {
          if (v == u || !g->leq(u, v)) continue;
          const int d = g->length(v) - g->length(u);
          const std::size_t want = (d - h) % 2 == 0 && h <= d ? dihedral_flipclass_count(d, h) : 0;
          ck.expect(count[v] == want, "flipclass count in I2(" + std::to_string(m) + ")");
        }
      }
      for (Elem v = 0; v < g->size(); ++v) {
        if (v == u || !g->leq(u, v)) continue;
        ck.expect(rtilde_recurrence(*g, u, v) == dihedral_rtilde(g->length(v) - g->length(u)),
                  "rtilde in I2(" + std::to_string(m) + ")");
      }
    }
  }
  return ck.ok;
}

bool multiplicativity(Check& ck) {
  std::vector<std::pair<std::string, int>> small{{"A1", 1}, {"A2", 2}, {"A2", 3}, {"B2", 2},
                                                 {"G2", 2}, {"A3", 3}, {"B2", 3}};
  std::mt19937 rng(31);
  int pairs = 0;
  for (int attempt = 0; pairs < 20 && attempt < 1000; ++attempt) {
    const auto& [n1, h1] = small[rng() % small.size()];
    const auto& [n2, h2] = small[rng() % small.size()];
    if (h1 + h2 > 5) continue;
    auto g1 = CoxeterGroup::build(n1), g2 = CoxeterGroup::build(n2);
    FlipCache c1(*g1), c2(*g2);
    const Elem u1 = static_cast<Elem>(rng() % g1->size()), u2 = static_cast<Elem>(rng() % g2->size());
    auto f1 = enumerate_flipclasses(c1, u1, h1, default_ordering(*g1));
    auto f2 = enumerate_flipclasses(c2, u2, h2, default_ordering(*g2));
    if (f1.empty() || f2.empty()) continue;
    const auto& a = f1[rng() % f1.size()];
    const auto& b = f2[rng() % f2.size()];
    auto prod = product_group(*g1, *g2);
    FlipCache cp(*prod);
    Flipclass f = shuffle_product(*prod, *g1, a, *g2, b);
    const std::string tag = n1 + "*" + n2;
    ck.expect(is_flipclass(cp, f), tag + " shuffle is a flipclass");
    ck.expect(valence_polynomial(f) == valence_polynomial(a) * valence_polynomial(b), tag + " valence");
    ck.expect(count_increasing(*prod, f, default_ordering(*prod)) ==
                  count_increasing(*g1, a, default_ordering(*g1)) * count_increasing(*g2, b, default_ordering(*g2)),
              tag + " increasing paths");
    ++pairs;
  }
  ck.expect(pairs == 20, "sampled 20 pairs");
  return ck.ok;
}

bool symmetry(Check& ck) {
  auto g = CoxeterGroup::build("B3");
  auto s = sweep_row("B3", 3, false);
  auto v = verify_symmetry(*g, s, default_ordering(*g));
  std::cout << "    " << s.entries.size() << " flipclasses, " << v.size() << " violations\n";
  ck.expect(v.empty(), "symmetry violations");
  return ck.ok;
}

bool congruence(Check& ck) {
  std::vector<GroupPtr> groups{CoxeterGroup::build("A4"), CoxeterGroup::build("B3")};
  auto rep = congruence_check(groups, 6);
  std::cout << "    " << rep.intervals << " intervals, " << rep.buckets.size() << " buckets\n";
  ck.expect(rep.intervals > 0, "no intervals");
  for (auto i : rep.discrepancies) ck.expect(false, "bucket " + rep.buckets[i].representative);
  for (const auto& b : rep.buckets) ck.expect(b.rtildes.size() == 1, "bucket " + b.representative);
  return ck.ok;
}

bool valence_anchor(Check& ck) {
  const BiPoly base = BiPoly::parse("x^2 + 2*y");
  auto a1 = CoxeterGroup::build("A1");
  FlipCache c1(*a1);
  auto fs = enumerate_flipclasses(c1, 0, 1, default_ordering(*a1));
  ck.expect(fs.size() == 1, "one A1 flipclass");
  if (fs.size() == 1) ck.expect(valence_polynomial(fs[0]) == base, "A1 valence");
  std::size_t seen = 0;
  for (auto name : {"A2", "B2", "G2"}) {
    auto g = CoxeterGroup::build(name);
    FlipCache cache(*g);
    for (Elem u = 0; u < g->size(); ++u) {
      for (const auto& f : enumerate_flipclasses(cache, u, 2, default_ordering(*g))) {
        ck.expect(valence_polynomial(f) == base * base, std::string(name) + " 2-flipclass valence");
        ++seen;
      }
    }
  }
  ck.expect(seen > 0, "no 2-flipclasses");
  return ck.ok;
}

bool crowns(Check& ck) {
  auto hits = five_crown_search(*CoxeterGroup::build("H3"));
  std::cout << "    H3: " << hits.size() << " five-crown intervals\n";
  ck.expect(!hits.empty(), "H3 has a five-crown interval");
  for (const auto& r : default_roster(false)) {
    ck.expect(five_crown_search(*CoxeterGroup::build(r.diagram)).empty(), r.diagram + " has no five-crown");
  }
  return ck.ok;
}

struct Criterion {
  int id;
  const char* name;
  double limit;  // seconds, 0 for none
  std::function<bool(Check&)> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "table rows", 0, table_rows},
      {2, "A3 interval [1234, 4231]", 5, a3_example},
      {3, "B3 pairing of 2-paths", 1, b3_pairing},
      {4, "Dyer formula against the recurrence", 600, dyer_oracle},
      {5, "ordering independence of c", 0, ordering_independence},
      {6, "refinement over the pooled roster", 0, refinement},
      {7, "dihedral groups", 30, dihedral_theory},
      {8, "multiplicativity on products", 0, multiplicativity},
      {9, "w0 symmetries", 0, symmetry},
      {10, "congruence of isomorphic intervals", 1800, congruence},
      {11, "valence anchors", 0, valence_anchor},
      {12, "five-crown intervals", 60, crowns},
  };
  int passed = 0;
  for (const auto& c : criteria) {
    Check ck;
    auto t0 = Clock::now();
    try {
      c.run(ck);
    } catch (const std::exception& e) {
      ck.expect(false, std::string("exception: ") + e.what());
    }
    const double t = seconds_since(t0);
    if (c.limit > 0) ck.expect(t < c.limit, "time limit " + std::to_string(c.limit) + " s");
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.2f s", t);
    std::cout << "criterion " << c.id << " " << (ck.ok ? "PASS" : "FAIL") << " (" << buf << ") " << c.name
              << std::endl;
    passed += ck.ok;
  }
  std::cout << passed << "/" << criteria.size() << " criteria passed\n";
  return passed == static_cast<int>(criteria.size()) ? 0 : 1;
}
