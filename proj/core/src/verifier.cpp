#include "bruhat_flip/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <mutex>
#include <set>
#include <thread>
#include <unordered_map>

#include "bruhat_flip/csort.hpp"
#include "bruhat_flip/errors.hpp"
#include "bruhat_flip/factor.hpp"
#include "bruhat_flip/poset.hpp"
#include "bruhat_flip/report.hpp"
#include "bruhat_flip/time_support.hpp"

namespace bflip {

std::vector<RosterRow> default_roster(bool extended) {
  std::vector<RosterRow> r{{"A1", 1}, {"A2", 2}, {"B2", 2}, {"G2", 2}, {"A3", 3},
                           {"B3", 3}, {"A4", 4}, {"B4", 4}, {"D4", 4}};
  if (extended) r.insert(r.end(), {{"F4", 4}, {"A5", 5}, {"D5", 5}});
  return r;
}

std::string to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::gamma_mismatch: return "gamma_mismatch";
    case ViolationKind::refinement_failure: return "refinement_failure";
    case ViolationKind::anti_iso_mismatch: return "anti_iso_mismatch";
  }
  return "unknown";
}

namespace {

Elem conjugate_w0(const CoxeterGroup& g, Elem u) { return g.multiply(g.w0(), g.multiply(u, g.w0())); }

Provenance provenance(const CoxeterGroup& g, const std::string& diagram, const Flipclass& f) {
  std::string bytes(reinterpret_cast<const char*>(f.data.data()), f.data.size() * sizeof(Elem));
  return {diagram, f.h, g.format(f.u), g.format(f.v), hex64(fnv1a64(bytes))};
}

}  // namespace

std::vector<Elem> reduced_start_elements(const CoxeterGroup& g, int h, std::span<const int> c,
                                         bool reduce_length, bool reduce_csort) {
  std::vector<Elem> out;
  const int top = g.max_length();
  for (Elem u = 0; u < g.size(); ++u) {
    if (g.length(u) + h > top) continue;
    if (reduce_length && 2 * g.length(u) > top - h) continue;
    if (reduce_csort) {
      Elem w = conjugate_w0(g, u);
      if (w != u && !csort_less(g, u, w, c)) continue;
    }
    out.push_back(u);
  }
  return out;
}

bool flipclass_admissible(const CoxeterGroup& g, const Flipclass& f, std::span<const int> c,
                          bool reduce_length, bool reduce_csort) {
  if (reduce_length && g.length(f.u) > g.max_length() - g.length(f.v)) return false;
  if (reduce_csort && conjugate_w0(g, f.u) == f.u) {
    Elem w = conjugate_w0(g, f.v);
    if (w != f.v && !csort_less(g, f.v, w, c)) return false;
  }
  return true;
}

SweepResult sweep(const CoxeterGroup& g, int h, const ReflectionOrdering& ord, std::span<const int> c,
                  const SweepOptions& opts) {
  SweepResult res;
  res.diagram = g.diagram().to_string();
  res.h = h;
  const auto starts = reduced_start_elements(g, h, c, opts.reduce_length, opts.reduce_csort);
  res.elements_to_check = starts.size();

  std::vector<std::vector<SweepEntry>> per_start(starts.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> total{0};
  std::mutex err_mu;
  std::exception_ptr error;
  auto work = [&] {
    FlipCache cache(g);
    while (true) {
      std::size_t i = next++;
      if (i >= starts.size()) return;
      try {
        const Elem u = starts[i];
        EnumerateOptions eo;
        eo.cap_paths = opts.cap_paths;
        if (opts.reduce_length) eo.max_end_length = g.max_length() - g.length(u);
        for (auto& f : enumerate_flipclasses(cache, u, h, ord, eo)) {
          if (!flipclass_admissible(g, f, c, opts.reduce_length, opts.reduce_csort)) continue;
          if ((total += f.size()) > opts.cap_paths) throw CapExceeded("sweep exceeds path cap");
          SweepEntry e;
          e.valence = valence_polynomial(f);
          e.valence_key = e.valence.to_string();
          e.c = count_increasing(g, f, ord);
          e.flipclass = std::move(f);
          per_start[i].push_back(std::move(e));
        }
      } catch (...) {
        std::lock_guard lock(err_mu);
        if (!error) error = std::current_exception();
        next = starts.size();
        return;
      }
    }
  };
  const int jobs = std::max(1, opts.jobs);
  if (jobs == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (error) std::rethrow_exception(error);
  for (auto& v : per_start) {
    for (auto& e : v) res.entries.push_back(std::move(e));
  }
  std::sort(res.entries.begin(), res.entries.end(),
            [](const SweepEntry& a, const SweepEntry& b) { return a.flipclass < b.flipclass; });
  return res;
}

namespace {

// Value of p at a fixed point, used to rule out divisions cheaply.
mpz_class probe(const BiPoly& p) {
  mpz_class v = 0;
  for (const auto& [e, c] : p.terms()) {
    mpz_class t = c;
    for (int i = 0; i < e.first; ++i) t *= 7;
    for (int i = 0; i < e.second; ++i) t *= 11;
    v += t;
  }
  return v;
}

// Exact k-th root of a positive rational, if there is one.
bool exact_root(const mpq_class& r, int k, mpq_class& out) {
  mpz_class n, d;
  bool en = mpz_root(n.get_mpz_t(), r.get_num_mpz_t(), static_cast<unsigned long>(k)) != 0;
  bool ed = mpz_root(d.get_mpz_t(), r.get_den_mpz_t(), static_cast<unsigned long>(k)) != 0;
  if (!en || !ed) return false;
  out = mpq_class(n, d);
  out.canonicalize();
  return true;
}

std::string str(const mpq_class& q) { return q.get_str(); }

class GammaBuilder {
 public:
  explicit GammaBuilder(std::size_t budget) : budget_(budget) {}

  void add(const Provenance& where, const SweepEntry& e) {
    auto it = known_.find(e.valence_key);
    if (it == known_.end()) it = known_.emplace(e.valence_key, resolve(e, where)).first;
    if (it->second != mpq_class(static_cast<unsigned long>(e.c))) {
      ViolationRecord v;
      v.kind = ViolationKind::gamma_mismatch;
      v.first = origin_[e.valence_key];
      v.second = where;
      v.polynomial = e.valence_key;
      v.expected = str(it->second);
      v.found = std::to_string(e.c);
      run.violations.push_back(std::move(v));
    }
  }

  bool irreducible(const SweepEntry& e) {
    auto it = irreducible_.find(e.valence_key);
    if (it == irreducible_.end()) it = irreducible_.emplace(e.valence_key, is_irreducible(e.valence)).first;
    return it->second;
  }

  GammaRun run;

 private:
  // Value of the full polynomial after defining any missing factors.
  mpq_class resolve(const SweepEntry& e, const Provenance& where) {
    origin_.emplace(e.valence_key, where);
    BiPoly rest = e.valence;
    const mpz_class content = rest.content();
    if (content != 1) {
      run.warnings.push_back("valence polynomial " + e.valence_key + " has content " + content.get_str() +
                             "; treated as a unit");
      rest = rest.primitive_part();
    }
    mpq_class known = 1;
    std::size_t attempts = 0;
    mpz_class rest_probe = probe(rest);
    for (const auto& [key, d] : run.table.polys) {
      if (rest.is_constant()) break;
      while (attempts < budget_) {
        ++attempts;
        const mpz_class& dp = probes_.at(key);
        if (dp != 0 && !mpz_divisible_p(rest_probe.get_mpz_t(), dp.get_mpz_t())) break;
        auto q = exact_divide(rest, d);
        if (!q) break;
        rest = std::move(*q);
        rest_probe = probe(rest);
        known *= run.table.values.at(key).value;
      }
      if (attempts >= budget_) {
        run.warnings.push_back("division budget exhausted on " + e.valence_key);
        break;
      }
    }
    const mpq_class target(static_cast<unsigned long>(e.c));
    if (rest.is_constant()) return known;

    Factorization fac = factor_bivariate(rest);
    int k = 0;
    for (const auto& [f, m] : fac.factors) k += m;
    const mpq_class ratio = target / known;
    GammaValue val;
    val.origin = where;
    if (k > 1) {
      run.warnings.push_back("residual of " + e.valence_key + " has " + std::to_string(k) +
                             " irreducible factors");
    }
    if (ratio <= 0) {
      run.warnings.push_back("non-positive ratio on " + e.valence_key);
      val.value = ratio;
    } else if (k == 1 || exact_root(ratio, k, val.value)) {
      if (k == 1) val.value = ratio;
    } else {
      val.value = mpq_class(std::pow(ratio.get_d(), 1.0 / k));
      val.approximate = true;
      run.warnings.push_back("approximate root assigned on factors of " + e.valence_key);
    }
    if (val.value.get_den() != 1) {
      run.warnings.push_back("non-integer value " + str(val.value) + " assigned on factors of " +
                             e.valence_key);
    }
    mpq_class total = known;
    for (const auto& [f, m] : fac.factors) {
      const std::string key = f.to_string();
      run.table.values.emplace(key, val);
      run.table.polys.emplace(key, f);
      probes_.emplace(key, probe(f));
      for (int i = 0; i < m; ++i) total *= val.value;
    }
    return total;
  }

  std::size_t budget_;
  std::unordered_map<std::string, mpq_class> known_;
  std::unordered_map<std::string, Provenance> origin_;
  std::unordered_map<std::string, bool> irreducible_;
  std::unordered_map<std::string, mpz_class> probes_;
};

}  // namespace

namespace {

void add_row(GammaBuilder& b, std::set<std::string>& earlier, const CoxeterGroup& g, const std::string& type,
             const SweepResult& s) {
  StatsRow row;
  row.type = type;
  row.h = s.h;
  row.elements_to_check = s.elements_to_check;
  row.flipclasses = s.entries.size();
  std::set<std::string> distinct, irreducible;
  for (const auto& e : s.entries) {
    b.add(provenance(g, type, e.flipclass), e);
    if (distinct.insert(e.valence_key).second && b.irreducible(e)) irreducible.insert(e.valence_key);
  }
  row.valence_polynomials = distinct.size();
  row.irreducible_valence_polynomials = irreducible.size();
  for (const auto& k : irreducible) {
    if (!earlier.count(k)) ++row.new_irreducible_valence_polynomials;
  }
  earlier.insert(irreducible.begin(), irreducible.end());
  b.run.rows.push_back(row);
}

}  // namespace

GammaRun run_gamma(std::span<const SweepResult> sweeps, std::size_t budget) {
  GammaBuilder b(budget);
  std::set<std::string> earlier;
  std::unordered_map<std::string, GroupPtr> groups;
  for (const auto& s : sweeps) {
    auto& g = groups[s.diagram];
    if (!g) g = CoxeterGroup::build(s.diagram);
    add_row(b, earlier, *g, s.diagram, s);
  }
  return std::move(b.run);
}

GammaRun run_gamma(const RunConfig& config, const RowCallback& on_row) {
  GammaBuilder b(config.gamma_budget);
  std::set<std::string> earlier;
  for (const auto& r : config.roster) {
    BuildOptions bo;
    bo.max_elements = config.cap_group;
    auto g = CoxeterGroup::build(r.diagram, bo);
    SweepOptions so;
    so.reduce_length = config.reduce_length;
    so.reduce_csort = config.reduce_csort;
    so.cap_paths = config.cap_paths;
    so.jobs = config.jobs;
    const auto ord = default_ordering(*g);
    SweepResult s;
    const std::string cache_file =
        config.cache_dir.empty() ? std::string() : sweep_cache_path(config.cache_dir, *g, r.h, ord, so);
    if (cache_file.empty() || !load_sweep(cache_file, *g, s)) {
      s = sweep(*g, r.h, ord, diagram_coxeter_element(*g), so);
      if (!cache_file.empty()) save_sweep(cache_file, s);
    }
    s.diagram = r.diagram;
    add_row(b, earlier, *g, r.diagram, s);
    if (on_row) on_row(r, s, b.run);
  }
  return std::move(b.run);
}

std::vector<ViolationRecord> verify_refinement(std::span<const SweepResult> sweeps) {
  std::vector<ViolationRecord> out;
  std::unordered_map<std::string, std::pair<std::size_t, Provenance>> first;
  std::unordered_map<std::string, GroupPtr> groups;
  for (const auto& s : sweeps) {
    auto& g = groups[s.diagram];
    if (!g) g = CoxeterGroup::build(s.diagram);
    for (const auto& e : s.entries) {
      auto it = first.find(e.valence_key);
      if (it == first.end()) {
        first.emplace(e.valence_key, std::make_pair(e.c, provenance(*g, s.diagram, e.flipclass)));
      } else if (it->second.first != e.c) {
        ViolationRecord v;
        v.kind = ViolationKind::refinement_failure;
        v.first = it->second.second;
        v.second = provenance(*g, s.diagram, e.flipclass);
        v.polynomial = e.valence_key;
        v.expected = std::to_string(it->second.first);
        v.found = std::to_string(e.c);
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

std::vector<ViolationRecord> verify_symmetry(const CoxeterGroup& g, const SweepResult& sweep,
                                             const ReflectionOrdering& ord) {
  std::vector<ViolationRecord> out;
  for (const auto& e : sweep.entries) {
    const auto base = canonical_form(TimeSupport::of(e.flipclass).poset().dual());
    for (W0Variant var : {W0Variant::right, W0Variant::left, W0Variant::conj}) {
      Flipclass f = w0_transform(g, e.flipclass, var);
      BiPoly d = valence_polynomial(f);
      std::size_t c = count_increasing(g, f, ord);
      bool ok = d == e.valence && c == e.c;
      if (ok && var != W0Variant::conj) ok = canonical_form(TimeSupport::of(f).poset()) == base;
      if (!ok) {
        ViolationRecord v;
        v.kind = ViolationKind::anti_iso_mismatch;
        v.first = provenance(g, sweep.diagram, e.flipclass);
        v.second = provenance(g, sweep.diagram, f);
        v.polynomial = e.valence_key;
        v.expected = std::to_string(e.c);
        v.found = d.to_string() + " / " + std::to_string(c);
        out.push_back(std::move(v));
      }
    }
  }
  return out;
}

CongruenceReport congruence_check(std::span<const GroupPtr> groups, int max_length, std::size_t interval_cap) {
  CongruenceReport rep;
  rep.max_length = max_length;
  bool all_type_a = true;
  for (const auto& g : groups) all_type_a = all_type_a && g->is_type_a();
  const int modulus = all_type_a ? 8 : 7;

  struct Acc {
    CongruenceBucket bucket;
    std::vector<QPoly> values;
  };
  std::map<std::vector<int>, Acc> buckets;
  for (const auto& gp : groups) {
    const CoxeterGroup& g = *gp;
    RTildeRecurrence rec(g);
    for (Elem u = 0; u < g.size(); ++u) {
      for (Elem v = 0; v < g.size(); ++v) {
        const int len = g.length(v) - g.length(u);
        if (len < 1 || len > max_length || !g.leq(u, v)) continue;
        ++rep.intervals;
        auto cert = canonical_form(interval_poset(g, u, v, interval_cap));
        auto& acc = buckets[cert];
        if (acc.bucket.size++ == 0) {
          acc.bucket.length = len;
          acc.bucket.representative = g.diagram().to_string() + " " + g.format(u) + " " + g.format(v);
        }
        const QPoly& r = rec(u, v);
        if (std::find(acc.values.begin(), acc.values.end(), r) == acc.values.end()) acc.values.push_back(r);
      }
    }
  }
  for (auto& [cert, acc] : buckets) {
    std::set<std::string> strs;
    for (const auto& q : acc.values) strs.insert(q.to_string());
    acc.bucket.rtildes.assign(strs.begin(), strs.end());
    bool bad = false;
    if (acc.bucket.length <= 8) {
      bad = acc.values.size() > 1;
    } else {
      for (const auto& q : acc.values) bad = bad || !(q.truncated(modulus) == acc.values[0].truncated(modulus));
    }
    if (bad) rep.discrepancies.push_back(rep.buckets.size());
    rep.buckets.push_back(std::move(acc.bucket));
  }
  return rep;
}

std::vector<std::pair<Elem, Elem>> five_crown_search(const CoxeterGroup& g) {
  std::vector<std::pair<Elem, Elem>> out;
  for (Elem u = 0; u < g.size(); ++u) {
    for (Elem v = 0; v < g.size(); ++v) {
      if (g.length(v) != g.length(u) + 3 || !g.leq(u, v)) continue;
      Poset p = interval_poset(g, u, v);
      const auto& atoms = p.up[0];
      if (atoms.size() != 5 || p.size() != 12) continue;
      // 5 atoms, 5 coatoms, each of degree 2, forming one 10-cycle.
      bool ok = true;
      for (int a : atoms) ok = ok && p.up[a].size() == 2;
      for (int b : p.down[p.size() - 1]) ok = ok && p.down[b].size() == 2;
      if (!ok) continue;
      int prev = -1, cur = atoms[0], steps = 0;
      bool at_atom = true;
      do {
        const auto& nb = at_atom ? p.up[cur] : p.down[cur];
        int nxt = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = nxt;
        at_atom = !at_atom;
        ++steps;
      } while (cur != atoms[0] && steps <= 10);
      if (steps == 10) out.emplace_back(u, v);
    }
  }
  return out;
}

}  // namespace bflip
