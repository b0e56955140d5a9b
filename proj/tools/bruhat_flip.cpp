#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bruhat_flip/csort.hpp"
#include "bruhat_flip/errors.hpp"
#include "bruhat_flip/factor.hpp"
#include "bruhat_flip/flipclass.hpp"
#include "bruhat_flip/group.hpp"
#include "bruhat_flip/reflection_order.hpp"
#include "bruhat_flip/report.hpp"
#include "bruhat_flip/rtilde.hpp"
#include "bruhat_flip/time_support.hpp"
#include "bruhat_flip/verifier.hpp"

using namespace bflip;
using nlohmann::ordered_json;

namespace {

constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;
constexpr int kExitCap = 3;

struct Shared {
  std::string group;
  std::string ordering = "default";
  int jobs = 1;
  std::string cache;
  std::size_t cap_paths = 10'000'000;
  std::size_t cap_group = 1'000'000;
  std::string format = "text";
  bool extended = false;
};

// Published statistics, used by `table1` to flag mismatching rows.
const std::vector<StatsRow> kReferenceRows = {
    {"A1", 1, 1, 1, 1, 1, 1},         {"A2", 2, 1, 1, 1, 0, 0},
    {"B2", 2, 3, 8, 1, 0, 0},         {"G2", 2, 5, 25, 1, 0, 0},
    {"A3", 3, 3, 15, 4, 3, 3},        {"B3", 3, 16, 216, 8, 7, 4},
    {"A4", 4, 16, 363, 11, 7, 7},     {"B4", 4, 125, 11987, 206, 198, 191},
    {"D4", 4, 53, 2283, 19, 15, 0},   {"F4", 4, 437, 144281, 1765, 1757, 1585},
    {"A5", 5, 92, 11343, 100, 89, 89}, {"D5", 5, 285, 102724, 1203, 1184, 402},
};

std::string invocation_line(int argc, char** argv) {
  std::string s;
  for (int i = 0; i < argc; ++i) {
    if (i) s += ' ';
    std::string a = argv[i];
    if (a.find_first_of(" \t\"'") != std::string::npos) a = "'" + a + "'";
    s += a;
  }
  return s;
}

std::string config_text(const Shared& sh) {
  std::ostringstream o;
  o << "group=" << sh.group << ";ordering=" << sh.ordering << ";cap_paths=" << sh.cap_paths
    << ";cap_group=" << sh.cap_group << ";extended=" << sh.extended;
  return o.str();
}

GroupPtr load_group(const Shared& sh) {
  if (sh.group.empty()) throw ParseError("--group is required");
  BuildOptions bo;
  bo.max_elements = sh.cap_group;
  return CoxeterGroup::build(sh.group, bo);
}

// "s1 s2 s1", "s1s2s1" or "1 2 1"; generators numbered from 1.
std::vector<int> parse_word(const CoxeterGroup& g, const std::string& text) {
  std::vector<int> word;
  std::string digits;
  auto flush = [&] {
    if (digits.empty()) return;
    int s = std::stoi(digits) - 1;
    if (s < 0 || s >= g.rank()) throw ParseError("generator out of range in word: " + text);
    word.push_back(s);
    digits.clear();
  };
  for (char ch : text) {
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      digits += ch;
    } else if (ch == 's' || ch == ' ' || ch == ',') {
      flush();
    } else {
      throw ParseError("unexpected character in word: " + text);
    }
  }
  flush();
  return word;
}

ReflectionOrdering load_ordering(const CoxeterGroup& g, const Shared& sh) {
  if (sh.ordering == "default") return default_ordering(g);
  return reflection_ordering_from_word(g, parse_word(g, sh.ordering));
}

std::vector<RosterRow> parse_rows(const std::string& text, bool extended) {
  if (text.empty()) return default_roster(extended);
  std::vector<RosterRow> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    // "A3" takes h = rank for the published rows; "F4:5" sets h explicitly.
    RosterRow r;
    auto colon = item.find(':');
    r.diagram = item.substr(0, colon);
    if (colon != std::string::npos) {
      r.h = std::stoi(item.substr(colon + 1));
    } else {
      r.h = Diagram::parse(r.diagram).rank();
    }
    rows.push_back(r);
  }
  return rows;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty() || out == "-") std::cout << text;
  else write_file(out, text);
}

std::string row_text(const StatsRow& r) {
  std::ostringstream o;
  o << r.type << " h=" << r.h << ": " << r.elements_to_check << " elements, " << r.flipclasses
    << " flipclasses, " << r.valence_polynomials << " valence polynomials, " << r.irreducible_valence_polynomials
    << " irreducible, " << r.new_irreducible_valence_polynomials << " new";
  return o.str();
}

std::vector<Flipclass> interval_flipclasses(const CoxeterGroup& g, const ReflectionOrdering& ord, Elem u, Elem v,
                                            int h, std::size_t cap) {
  FlipCache cache(g);
  EnumerateOptions eo;
  eo.cap_paths = cap;
  eo.max_end_length = g.length(v);
  std::vector<Flipclass> out;
  for (auto& f : enumerate_flipclasses(cache, u, h, ord, eo)) {
    if (f.v == v) out.push_back(std::move(f));
  }
  return out;
}

std::vector<int> heights(const CoxeterGroup& g, Elem u, Elem v, int h) {
  if (h > 0) return {h};
  std::vector<int> hs;
  const int d = g.length(v) - g.length(u);
  for (int k = d % 2 == 0 ? 2 : 1; k <= d; k += 2) hs.push_back(k);
  return hs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Flipclasses, R-polynomials and valence polynomials of finite Coxeter groups"};
  app.require_subcommand(1);
  // "-h" is left free for the path length option.
  app.set_help_flag("--help", "Print this help message and exit");
  app.set_version_flag("--version", version());
  Shared sh;
  auto add_shared = [&sh](CLI::App* c) {
    c->add_option("--group", sh.group, "Coxeter diagram, e.g. A3, B4, I2(7), A2xA1");
    c->add_option("--ordering", sh.ordering, "Reduced word of w0 defining the reflection ordering, or 'default'");
    c->add_option("--jobs", sh.jobs, "Worker threads for sweeps")->check(CLI::PositiveNumber);
    c->add_option("--cache", sh.cache, "Directory for sweep caches");
    c->add_option("--cap-paths", sh.cap_paths, "Maximum number of paths in an enumeration");
    c->add_option("--cap-group", sh.cap_group, "Maximum group order");
    c->add_option("--format", sh.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    c->add_flag("--extended", sh.extended, "Include the larger roster rows");
  };
  const std::string invocation = invocation_line(argc, argv);
  auto header = [&] { return ReportHeader{"bruhat-flip", version(), invocation, config_text(sh)}; };

  std::string u_text, v_text, out, rows_text, groups_text = "A4,B3";
  int h = 0, max_length = 6;
  std::string method = "recurrence";

  auto* info = app.add_subcommand("group-info", "Order, rank, reflections and longest element");
  add_shared(info);
  auto* rt = app.add_subcommand("rtilde", "R-tilde polynomial of an interval");
  add_shared(rt);
  rt->add_option("--u", u_text)->required();
  rt->add_option("--v", v_text)->required();
  rt->add_option("--method", method)->check(CLI::IsMember({"recurrence", "dyer"}));
  auto* fc = app.add_subcommand("flipclasses", "Flipclasses of an interval");
  add_shared(fc);
  fc->add_option("--u", u_text)->required();
  fc->add_option("--v", v_text)->required();
  fc->add_option("--h", h, "Path length (default: all)");
  auto* val = app.add_subcommand("valence", "Valence polynomials of the flipclasses of an interval, factored");
  add_shared(val);
  val->add_option("--u", u_text)->required();
  val->add_option("--v", v_text)->required();
  val->add_option("--h", h, "Path length (default: all)");
  auto* sw = app.add_subcommand("sweep", "Reduced flipclass sweep of one group");
  add_shared(sw);
  sw->add_option("--h", h)->required();
  sw->add_option("--out", out);
  auto* ver = app.add_subcommand("verify", "Gamma table and refinement check over a roster");
  add_shared(ver);
  ver->add_option("--rows", rows_text, "Comma separated rows such as A3 or F4:5");
  ver->add_option("--out", out, "Output directory (default: current directory)");
  auto* t1 = app.add_subcommand("table1", "Statistics per roster row");
  add_shared(t1);
  t1->add_option("--rows", rows_text, "Comma separated rows such as A3 or F4:5");
  t1->add_option("--out", out, "CSV output file (default: stdout)");
  auto* cg = app.add_subcommand("congruence", "Bucket intervals by isomorphism type and compare R-tilde");
  add_shared(cg);
  cg->add_option("--groups", groups_text, "Comma separated diagrams");
  cg->add_option("--max-length", max_length)->check(CLI::Range(1, 12));
  cg->add_option("--out", out, "JSON output file (default: stdout)");
  auto* cr = app.add_subcommand("crowns", "Length-3 intervals isomorphic to the 5-crown");
  add_shared(cr);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (info->parsed()) {
      auto g = load_group(sh);
      if (sh.format == "json") {
        ordered_json j{{"group", g->diagram().to_string()}, {"rank", g->rank()},        {"order", g->size()},
                       {"reflections", g->num_reflections()}, {"max_length", g->max_length()},
                       {"w0", g->format_word(g->w0())}};
        std::cout << j.dump(2) << "\n";
      } else {
        std::cout << "group " << g->diagram().to_string() << "\nrank " << g->rank() << "\norder " << g->size()
                  << "\nreflections " << g->num_reflections() << "\nmax length " << g->max_length() << "\nw0 "
                  << g->format_word(g->w0()) << "\n";
      }
      return 0;
    }
    if (rt->parsed()) {
      auto g = load_group(sh);
      Elem u = g->parse(u_text), v = g->parse(v_text);
      QPoly r = method == "dyer" ? rtilde_dyer(*g, u, v, load_ordering(*g, sh)) : rtilde_recurrence(*g, u, v);
      std::cout << r.to_string() << "\n";
      return 0;
    }
    if (fc->parsed() || val->parsed()) {
      auto g = load_group(sh);
      auto ord = load_ordering(*g, sh);
      Elem u = g->parse(u_text), v = g->parse(v_text);
      if (!g->leq(u, v)) throw ParseError("u is not below v");
      ordered_json arr = ordered_json::array();
      for (int k : heights(*g, u, v, h)) {
        for (const auto& f : interval_flipclasses(*g, ord, u, v, k, sh.cap_paths)) {
          auto meta = flipclass_info(*g, f);
          BiPoly d = valence_polynomial(f);
          std::size_t c = count_increasing(*g, f, ord);
          ordered_json j{{"h", k}, {"paths", f.size()}, {"c", c}, {"span_dim", meta.span_dim},
                         {"dihedral", meta.is_dihedral}, {"reducible", meta.is_reducible},
                         {"valence", d.to_string()}};
          if (val->parsed()) {
            auto fac = factor_bivariate(d);
            ordered_json parts = ordered_json::array();
            for (const auto& [p, m] : fac.factors) parts.push_back({{"factor", p.to_string()}, {"power", m}});
            j["content"] = fac.unit.get_str();
            j["factors"] = parts;
          }
          if (sh.format == "text") {
            std::cout << "h=" << k << " paths=" << f.size() << " c=" << c << " span=" << meta.span_dim
                      << (meta.is_dihedral ? " dihedral" : "") << (meta.is_reducible ? " reducible" : "")
                      << " D=" << d.to_string();
            if (val->parsed()) {
              std::cout << " =";
              if (j["content"] != "1") std::cout << " " << j["content"].get<std::string>();
              for (const auto& p : j["factors"]) {
                std::cout << " (" << p["factor"].get<std::string>() << ")";
                if (p["power"] != 1) std::cout << "^" << p["power"];
              }
            }
            std::cout << "\n";
          }
          arr.push_back(std::move(j));
        }
      }
      if (sh.format != "text") std::cout << arr.dump(2) << "\n";
      return 0;
    }
    if (sw->parsed()) {
      auto g = load_group(sh);
      auto ord = load_ordering(*g, sh);
      SweepOptions so;
      so.cap_paths = sh.cap_paths;
      so.jobs = sh.jobs;
      SweepResult s;
      std::string cache_file = sh.cache.empty() ? "" : sweep_cache_path(sh.cache, *g, h, ord, so);
      if (cache_file.empty() || !load_sweep(cache_file, *g, s)) {
        s = sweep(*g, h, ord, diagram_coxeter_element(*g), so);
        if (!cache_file.empty()) save_sweep(cache_file, s);
      }
      std::vector<SweepResult> one{s};
      one[0].diagram = sh.group;
      auto run = run_gamma(one);
      if (sh.format == "csv") emit(table1_csv(run.rows), out);
      else emit(row_text(run.rows[0]) + "\n", out);
      return 0;
    }
    if (ver->parsed() || t1->parsed()) {
      RunConfig cfg;
      cfg.roster = parse_rows(rows_text, sh.extended);
      cfg.cap_paths = sh.cap_paths;
      cfg.cap_group = sh.cap_group;
      cfg.jobs = sh.jobs;
      cfg.cache_dir = sh.cache;
      std::vector<SweepResult> sweeps;
      const bool verify = ver->parsed();
      const std::string dir = out.empty() ? "." : out;
      auto run = run_gamma(cfg, [&](const RosterRow&, const SweepResult& s, const GammaRun& g) {
        std::cerr << row_text(g.rows.back()) << "\n";
        if (verify) sweeps.push_back(s);
        if (verify) write_file(dir + "/gamma.json", gamma_json(g.table, header()));
      });
      for (const auto& w : run.warnings) std::cerr << "warning: " << w << "\n";
      if (verify) {
        auto violations = run.violations;
        auto refine = verify_refinement(sweeps);
        violations.insert(violations.end(), refine.begin(), refine.end());
        write_file(dir + "/gamma.json", gamma_json(run.table, header()));
        write_file(dir + "/violations.json", violations_json(violations, header()));
        write_file(dir + "/table1.csv", table1_csv(run.rows));
        std::cout << violations.size() << " violations, " << run.table.values.size() << " gamma values\n";
        return violations.empty() ? 0 : kExitViolation;
      }
      int mismatches = 0;
      for (const auto& r : run.rows) {
        for (const auto& ref : kReferenceRows) {
          if (ref.type == r.type && ref.h == r.h && !(ref == r)) {
            std::cerr << "mismatch with published row: " << row_text(ref) << "\n";
            ++mismatches;
          }
        }
      }
      if (sh.format == "text" && (out.empty() || out == "-")) {
        for (const auto& r : run.rows) std::cout << row_text(r) << "\n";
      } else {
        emit(table1_csv(run.rows), out);
      }
      return mismatches == 0 && run.violations.empty() ? 0 : kExitViolation;
    }
    if (cg->parsed()) {
      std::vector<GroupPtr> groups;
      std::stringstream ss(groups_text);
      std::string item;
      BuildOptions bo;
      bo.max_elements = sh.cap_group;
      while (std::getline(ss, item, ',')) {
        if (!item.empty()) groups.push_back(CoxeterGroup::build(item, bo));
      }
      auto rep = congruence_check(groups, max_length);
      if (sh.format == "json" || !out.empty()) {
        emit(congruence_json(rep, header()), out);
      } else {
        std::cout << rep.intervals << " intervals, " << rep.buckets.size() << " isomorphism types, "
                  << rep.discrepancies.size() << " discrepancies\n";
        for (auto i : rep.discrepancies) {
          std::cout << "  " << rep.buckets[i].representative << ":";
          for (const auto& r : rep.buckets[i].rtildes) std::cout << " [" << r << "]";
          std::cout << "\n";
        }
      }
      return rep.discrepancies.empty() ? 0 : kExitViolation;
    }
    if (cr->parsed()) {
      auto g = load_group(sh);
      auto found = five_crown_search(*g);
      for (const auto& [u, v] : found) std::cout << g->format(u) << " -> " << g->format(v) << "\n";
      std::cerr << found.size() << " five-crown intervals\n";
      return 0;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return kExitCap;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UnsupportedDiagram& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotReduced& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const NotLongestElement& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitViolation;
  }
  return 0;
}
