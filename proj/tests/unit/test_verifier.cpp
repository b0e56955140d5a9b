#include <doctest.h>

#include <filesystem>
#include <set>

#include "bruhat_flip/csort.hpp"
#include "bruhat_flip/report.hpp"
#include "bruhat_flip/time_support.hpp"
#include "bruhat_flip/verifier.hpp"

using namespace bflip;

namespace {

SweepResult run_sweep(const std::string& name, int h, bool reduce = true, int jobs = 1) {
  auto g = CoxeterGroup::build(name);
  SweepOptions so;
  so.reduce_length = reduce;
  so.reduce_csort = reduce;
  so.jobs = jobs;
  auto s = sweep(*g, h, default_ordering(*g), diagram_coxeter_element(*g), so);
  s.diagram = name;
  return s;
}

}  // namespace

TEST_CASE("elements to check") {
  struct Row {
    const char* name;
    int h;
    std::size_t count;
  };
  for (auto r : {Row{"A1", 1, 1}, Row{"A2", 2, 1}, Row{"B2", 2, 3}, Row{"G2", 2, 5}, Row{"A3", 3, 3},
                 Row{"B3", 3, 16}, Row{"A4", 4, 16}, Row{"D4", 4, 53}}) {
    CAPTURE(r.name);
    auto g = CoxeterGroup::build(r.name);
    CHECK(reduced_start_elements(*g, r.h, diagram_coxeter_element(*g)).size() == r.count);
  }
}

TEST_CASE("elements to check do not depend on the Coxeter element") {
  auto g = CoxeterGroup::build("B3");
  for (auto c : {std::vector<int>{0, 1, 2}, std::vector<int>{2, 1, 0}, std::vector<int>{1, 0, 2}}) {
    CHECK(reduced_start_elements(*g, 3, c).size() == 16);
  }
}

TEST_CASE("sweeps do not depend on the number of workers") {
  auto a = run_sweep("B3", 3, true, 1);
  auto b = run_sweep("B3", 3, true, 3);
  REQUIRE(a.entries.size() == b.entries.size());
  for (std::size_t i = 0; i < a.entries.size(); ++i) {
    CHECK(a.entries[i].flipclass == b.entries[i].flipclass);
    CHECK(a.entries[i].valence_key == b.entries[i].valence_key);
    CHECK(a.entries[i].c == b.entries[i].c);
  }
}

TEST_CASE("small table rows") {
  std::vector<SweepResult> sweeps{run_sweep("A1", 1), run_sweep("A2", 2), run_sweep("B2", 2),
                                  run_sweep("G2", 2), run_sweep("A3", 3), run_sweep("B3", 3)};
  auto run = run_gamma(sweeps);
  std::vector<StatsRow> expect{{"A1", 1, 1, 1, 1, 1, 1}, {"A2", 2, 1, 1, 1, 0, 0}, {"B2", 2, 3, 8, 1, 0, 0},
                               {"G2", 2, 5, 25, 1, 0, 0}, {"A3", 3, 3, 15, 4, 3, 3}, {"B3", 3, 16, 216, 8, 7, 4}};
  CHECK(run.rows == expect);
  CHECK(run.violations.empty());
  CHECK(run.warnings.empty());
  CHECK(run.table.values.at("x^2 + 2*y").value == 1);
  CHECK(verify_refinement(sweeps).empty());
  for (const auto& s : sweeps) {
    for (const auto& e : s.entries) CHECK(e.c >= 1);
  }
}

TEST_CASE("permuting rows within one h keeps the values") {
  std::vector<SweepResult> a{run_sweep("A1", 1), run_sweep("A2", 2), run_sweep("B2", 2), run_sweep("A3", 3),
                             run_sweep("B3", 3)};
  std::vector<SweepResult> b{a[0], a[2], a[1], a[4], a[3]};
  auto ra = run_gamma(a), rb = run_gamma(b);
  CHECK(rb.violations.empty());
  CHECK(ra.table.values.size() == rb.table.values.size());
  for (const auto& [k, v] : ra.table.values) {
    REQUIRE(rb.table.values.count(k));
    CHECK(rb.table.values.at(k).value == v.value);
  }
}

TEST_CASE("reductions lose nothing up to w0 symmetry") {
  auto g = CoxeterGroup::build("B3");
  auto full = run_sweep("B3", 3, false);
  auto reduced = run_sweep("B3", 3, true);
  CHECK(full.entries.size() > reduced.entries.size());
  std::set<std::vector<Elem>> admitted;
  for (const auto& e : reduced.entries) admitted.insert(e.flipclass.data);
  for (const auto& e : full.entries) {
    // Orbit under the group generated by the three maps.
    std::vector<Flipclass> orbit{e.flipclass};
    for (std::size_t i = 0; i < orbit.size(); ++i) {
      for (auto var : {W0Variant::right, W0Variant::left, W0Variant::conj}) {
        Flipclass t = w0_transform(*g, orbit[i], var);
        if (std::find(orbit.begin(), orbit.end(), t) == orbit.end()) orbit.push_back(t);
      }
    }
    bool hit = false;
    for (const auto& f : orbit) hit = hit || admitted.count(f.data);
    CHECK(hit);
  }
}

TEST_CASE("w0 symmetries preserve valence and c") {
  auto g = CoxeterGroup::build("B3");
  auto s = run_sweep("B3", 3, false);
  CHECK(verify_symmetry(*g, s, default_ordering(*g)).empty());
}

TEST_CASE("refinement violations are reported") {
  SweepResult a = run_sweep("A1", 1);
  SweepResult b = a;
  b.entries[0].c = 2;
  auto v = verify_refinement(std::vector<SweepResult>{a, b});
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::refinement_failure);
  CHECK(v[0].expected == "1");
  CHECK(v[0].found == "2");
  auto run = run_gamma(std::vector<SweepResult>{a, b});
  REQUIRE(run.violations.size() == 1);
  CHECK(run.violations[0].kind == ViolationKind::gamma_mismatch);
}

TEST_CASE("five crowns") {
  CHECK(five_crown_search(*CoxeterGroup::build("A3")).empty());
  CHECK(five_crown_search(*CoxeterGroup::build("B3")).empty());
  CHECK(!five_crown_search(*CoxeterGroup::build("H3")).empty());
}

TEST_CASE("congruence buckets in small groups") {
  std::vector<GroupPtr> groups{CoxeterGroup::build("B3"), CoxeterGroup::build("G2")};
  auto rep = congruence_check(groups, 4);
  CHECK(rep.discrepancies.empty());
  for (const auto& b : rep.buckets) {
    CHECK(b.rtildes.size() == 1);
    if (b.length == 1) CHECK(b.rtildes[0] == "q");
  }
}

TEST_CASE("report round trips") {
  std::vector<SweepResult> sweeps{run_sweep("A1", 1), run_sweep("A3", 3)};
  auto run = run_gamma(sweeps);
  ReportHeader h{"bruhat-flip", version(), "test", "rows=A1,A3"};
  auto text = gamma_json(run.table, h);
  auto back = parse_gamma_json(text);
  CHECK(gamma_json(back, h) == text);
  for (const auto& [k, p] : back.polys) CHECK(p.to_string() == k);
  CHECK(parse_table1_csv(table1_csv(run.rows)) == run.rows);
  CHECK(config_hash(h) == hex64(fnv1a64("rows=A1,A3")));
  CHECK(hex64(fnv1a64("")) == "cbf29ce484222325");
}

TEST_CASE("sweep cache round trip") {
  auto g = CoxeterGroup::build("B3");
  auto s = run_sweep("B3", 3);
  auto dir = std::filesystem::temp_directory_path() / "bruhat_flip_cache_test";
  std::filesystem::remove_all(dir);
  SweepOptions so;
  auto path = sweep_cache_path(dir.string(), *g, 3, default_ordering(*g), so);
  SweepResult loaded;
  CHECK(!load_sweep(path, *g, loaded));
  save_sweep(path, s);
  REQUIRE(load_sweep(path, *g, loaded));
  REQUIRE(loaded.entries.size() == s.entries.size());
  CHECK(loaded.elements_to_check == s.elements_to_check);
  for (std::size_t i = 0; i < s.entries.size(); ++i) {
    CHECK(loaded.entries[i].flipclass == s.entries[i].flipclass);
    CHECK(loaded.entries[i].flipclass.u == s.entries[i].flipclass.u);
    CHECK(loaded.entries[i].flipclass.v == s.entries[i].flipclass.v);
    CHECK(loaded.entries[i].valence == s.entries[i].valence);
    CHECK(loaded.entries[i].c == s.entries[i].c);
  }
  std::filesystem::remove_all(dir);
}
