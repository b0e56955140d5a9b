#include "bruhat_flip/report.hpp"

#include <cctype>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "bruhat_flip/errors.hpp"
#include "json.hpp"

#ifndef BRUHAT_FLIP_VERSION
#define BRUHAT_FLIP_VERSION "0.0.0"
#endif

namespace bflip {

using nlohmann::ordered_json;

std::string version() { return BRUHAT_FLIP_VERSION; }

std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : bytes) h = (h ^ ch) * 0x100000001b3ULL;
  return h;
}

std::string hex64(std::uint64_t v) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
  return buf;
}

std::string config_hash(const ReportHeader& h) { return hex64(fnv1a64(h.config)); }

namespace {

ordered_json header_json(const ReportHeader& h) {
  ordered_json j;
  j["tool"] = h.tool;
  j["version"] = h.version.empty() ? version() : h.version;
  j["invocation"] = h.invocation;
  j["config"] = h.config;
  j["config_hash"] = config_hash(h);
  return j;
}

ordered_json provenance_json(const Provenance& p) {
  return ordered_json{{"group", p.diagram}, {"h", p.h}, {"u", p.u}, {"v", p.v}, {"flipclass", p.flipclass}};
}

Provenance provenance_from(const ordered_json& j) {
  return {j.at("group").get<std::string>(), j.at("h").get<int>(), j.at("u").get<std::string>(),
          j.at("v").get<std::string>(), j.at("flipclass").get<std::string>()};
}

}  // namespace

std::string table1_csv(const std::vector<StatsRow>& rows) {
  std::ostringstream out;
  out << "type,h,elements_to_check,flipclasses,valence_polynomials,irreducible_valence_polynomials,"
         "new_irreducible_valence_polynomials\n";
  for (const auto& r : rows) {
    out << r.type << ',' << r.h << ',' << r.elements_to_check << ',' << r.flipclasses << ','
        << r.valence_polynomials << ',' << r.irreducible_valence_polynomials << ','
        << r.new_irreducible_valence_polynomials << '\n';
  }
  return out.str();
}

std::vector<StatsRow> parse_table1_csv(std::string_view text) {
  std::vector<StatsRow> rows;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = true;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    if (header) {
      header = false;
      continue;
    }
    std::vector<std::string> f;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) f.push_back(cell);
    if (f.size() != 7) throw ParseError("table row needs 7 fields: " + line);
    try {
      StatsRow r;
      r.type = f[0];
      r.h = std::stoi(f[1]);
      r.elements_to_check = std::stoull(f[2]);
      r.flipclasses = std::stoull(f[3]);
      r.valence_polynomials = std::stoull(f[4]);
      r.irreducible_valence_polynomials = std::stoull(f[5]);
      r.new_irreducible_valence_polynomials = std::stoull(f[6]);
      rows.push_back(r);
    } catch (const std::logic_error&) {
      throw ParseError("bad number in table row: " + line);
    }
  }
  return rows;
}

std::string gamma_json(const GammaTable& table, const ReportHeader& header) {
  ordered_json j;
  j["header"] = header_json(header);
  ordered_json values = ordered_json::array();
  for (const auto& [key, val] : table.values) {
    values.push_back({{"polynomial", key},
                      {"value", val.value.get_str()},
                      {"approximate", val.approximate},
                      {"origin", provenance_json(val.origin)}});
  }
  j["values"] = std::move(values);
  return j.dump(2) + "\n";
}

GammaTable parse_gamma_json(std::string_view text) {
  GammaTable t;
  try {
    auto j = ordered_json::parse(text);
    for (const auto& v : j.at("values")) {
      const std::string key = v.at("polynomial").get<std::string>();
      GammaValue g;
      g.value = mpq_class(v.at("value").get<std::string>());
      g.value.canonicalize();
      g.approximate = v.at("approximate").get<bool>();
      g.origin = provenance_from(v.at("origin"));
      t.values.emplace(key, g);
      t.polys.emplace(key, BiPoly::parse(key));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("gamma table: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("gamma table: ") + e.what());
  }
  return t;
}

std::string violations_json(const std::vector<ViolationRecord>& v, const ReportHeader& header) {
  ordered_json j;
  j["header"] = header_json(header);
  ordered_json arr = ordered_json::array();
  for (const auto& r : v) {
    arr.push_back({{"kind", to_string(r.kind)},
                   {"polynomial", r.polynomial},
                   {"expected", r.expected},
                   {"found", r.found},
                   {"first", provenance_json(r.first)},
                   {"second", provenance_json(r.second)}});
  }
  j["violations"] = std::move(arr);
  return j.dump(2) + "\n";
}

std::string congruence_json(const CongruenceReport& r, const ReportHeader& header) {
  ordered_json j;
  j["header"] = header_json(header);
  j["max_length"] = r.max_length;
  j["intervals"] = r.intervals;
  ordered_json buckets = ordered_json::array();
  for (const auto& b : r.buckets) {
    buckets.push_back({{"length", b.length},
                       {"size", b.size},
                       {"representative", b.representative},
                       {"rtilde", b.rtildes}});
  }
  j["buckets"] = std::move(buckets);
  j["discrepancies"] = r.discrepancies;
  return j.dump(2) + "\n";
}

std::string sweep_cache_path(const std::string& dir, const CoxeterGroup& g, int h,
                             const ReflectionOrdering& ord, const SweepOptions& opts) {
  std::string key = g.diagram().to_string() + "|" + std::to_string(h) + "|" + version() + "|" +
                    (opts.reduce_length ? "L" : "l") + (opts.reduce_csort ? "C" : "c");
  for (int r : ord.order) key += "," + std::to_string(r);
  std::string name = g.diagram().to_string();
  for (char& ch : name) {
    if (!std::isalnum(static_cast<unsigned char>(ch))) ch = '_';
  }
  return (std::filesystem::path(dir) / ("sweep-" + name + "-h" + std::to_string(h) + "-" +
                                        hex64(fnv1a64(key)) + ".txt"))
      .string();
}

// Format: "bruhat-flip-sweep 1", then "<h> <elements_to_check> <entries>",
// then one line per entry: "<c> <paths> <vertex ids...>\t<valence>".
bool load_sweep(const std::string& path, const CoxeterGroup& g, SweepResult& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::string magic;
  int fmt = 0;
  in >> magic >> fmt;
  if (magic != "bruhat-flip-sweep" || fmt != 1) return false;
  SweepResult s;
  std::size_t n = 0;
  if (!(in >> s.h >> s.elements_to_check >> n)) return false;
  s.diagram = g.diagram().to_string();
  s.entries.reserve(n);
  try {
    for (std::size_t i = 0; i < n; ++i) {
      SweepEntry e;
      std::size_t paths = 0;
      if (!(in >> e.c >> paths)) return false;
      Flipclass& f = e.flipclass;
      f.h = s.h;
      f.data.resize(paths * static_cast<std::size_t>(s.h + 1));
      for (auto& x : f.data) {
        if (!(in >> x) || x < 0 || x >= g.size()) return false;
      }
      if (f.data.empty()) return false;
      f.u = f.data.front();
      f.v = f.data[static_cast<std::size_t>(s.h)];
      in.ignore(1);
      if (!std::getline(in, e.valence_key)) return false;
      e.valence = BiPoly::parse(e.valence_key);
      s.entries.push_back(std::move(e));
    }
  } catch (const Error&) {
    return false;
  }
  out = std::move(s);
  return true;
}

void save_sweep(const std::string& path, const SweepResult& s) {
  std::ostringstream out;
  out << "bruhat-flip-sweep 1\n" << s.h << ' ' << s.elements_to_check << ' ' << s.entries.size() << '\n';
  for (const auto& e : s.entries) {
    out << e.c << ' ' << e.flipclass.size();
    for (Elem x : e.flipclass.data) out << ' ' << x;
    out << '\t' << e.valence_key << '\n';
  }
  const std::string tmp = path + ".tmp";
  write_file(tmp, out.str());
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error("cannot write " + path + ": " + ec.message());
}

void write_file(const std::string& path, std::string_view text) {
  std::filesystem::path p(path);
  std::error_code ec;
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path(), ec);
  std::ofstream out(p, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error("write failed on " + path);
}

}  // namespace bflip
