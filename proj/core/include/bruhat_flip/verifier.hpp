#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "bruhat_flip/bipoly.hpp"
#include "bruhat_flip/flipclass.hpp"
#include "bruhat_flip/group.hpp"
#include "bruhat_flip/reflection_order.hpp"
#include "bruhat_flip/rtilde.hpp"

namespace bflip {

struct RosterRow {
  std::string diagram;
  int h = 0;
  friend bool operator==(const RosterRow&, const RosterRow&) = default;
};

struct RunConfig {
  /// Processed in order; the order decides the "new irreducible" column.
  std::vector<RosterRow> roster;
  std::size_t cap_paths = 10'000'000;
  std::size_t cap_group = 1'000'000;
  int jobs = 1;
  /// Directory for sweep caches and resumable gamma tables; empty disables.
  std::string cache_dir;
  std::string out_dir = ".";
  bool reduce_length = true;
  bool reduce_csort = true;
  /// Division attempts allowed when searching the known part of a polynomial.
  std::size_t gamma_budget = 10'000;
};

/// Weyl rows up to h = 4 without F4; `extended` appends F4 (h = 4), A5 and D5.
std::vector<RosterRow> default_roster(bool extended);

struct SweepOptions {
  bool reduce_length = true;
  bool reduce_csort = true;
  std::size_t cap_paths = 10'000'000;
  int jobs = 1;
};

struct SweepEntry {
  Flipclass flipclass;
  BiPoly valence;
  std::string valence_key;  // canonical string of `valence`
  std::size_t c = 0;        // increasing paths
};

struct SweepResult {
  std::string diagram;
  int h = 0;
  std::size_t elements_to_check = 0;
  std::vector<SweepEntry> entries;  // sorted by flipclass key
};

/// Start elements u with 2 l(u) <= l(w0) - h and u <_c w0 u w0 or u = w0 u w0
/// (each reduction switchable).
std::vector<Elem> reduced_start_elements(const CoxeterGroup& g, int h, std::span<const int> c,
                                         bool reduce_length = true, bool reduce_csort = true);

/// l(u) <= l(w0) - l(v), and v <=_c w0 v w0 when u = w0 u w0.
bool flipclass_admissible(const CoxeterGroup& g, const Flipclass& f, std::span<const int> c,
                          bool reduce_length = true, bool reduce_csort = true);

/// All admissible h-flipclasses from the reduced start elements, with their
/// valence polynomials and increasing-path counts. The result does not depend
/// on `jobs`.
SweepResult sweep(const CoxeterGroup& g, int h, const ReflectionOrdering& ord, std::span<const int> c,
                  const SweepOptions& opts = {});

struct Provenance {
  std::string diagram;
  int h = 0;
  std::string u;
  std::string v;
  /// Hex digest of the flipclass key.
  std::string flipclass;
};

struct GammaValue {
  mpq_class value;
  /// Set when a k-th root was not exact and `value` is a rounded root.
  bool approximate = false;
  Provenance origin;
};

struct GammaTable {
  /// Canonical polynomial string -> value. Keys are irreducible.
  std::map<std::string, GammaValue> values;
  std::map<std::string, BiPoly> polys;

  bool contains(const std::string& key) const { return values.count(key) != 0; }
};

enum class ViolationKind { gamma_mismatch, refinement_failure, anti_iso_mismatch };

std::string to_string(ViolationKind kind);

struct ViolationRecord {
  ViolationKind kind = ViolationKind::gamma_mismatch;
  Provenance first;
  Provenance second;
  std::string polynomial;
  std::string expected;
  std::string found;
};

struct StatsRow {
  std::string type;
  int h = 0;
  std::size_t elements_to_check = 0;
  std::size_t flipclasses = 0;
  std::size_t valence_polynomials = 0;
  std::size_t irreducible_valence_polynomials = 0;
  std::size_t new_irreducible_valence_polynomials = 0;
  friend bool operator==(const StatsRow&, const StatsRow&) = default;
};

struct GammaRun {
  GammaTable table;
  std::vector<StatsRow> rows;
  std::vector<ViolationRecord> violations;
  std::vector<std::string> warnings;
};

/// Called after each roster row with the state so far.
using RowCallback = std::function<void(const RosterRow&, const SweepResult&, const GammaRun&)>;

/// Sweeps the roster and builds the table of values on irreducible factors,
/// checking every flipclass against it.
GammaRun run_gamma(const RunConfig& config, const RowCallback& on_row = {});

/// Same, over sweeps computed elsewhere (one per roster row, in order).
GammaRun run_gamma(std::span<const SweepResult> sweeps, std::size_t budget = 10'000);

/// Entries sharing a valence polynomial with different c, pairwise against
/// the first occurrence.
std::vector<ViolationRecord> verify_refinement(std::span<const SweepResult> sweeps);

/// Checks the three w0 symmetries on every entry: equal valence polynomial and
/// c, and dual time-support posets for the two reversing maps.
std::vector<ViolationRecord> verify_symmetry(const CoxeterGroup& g, const SweepResult& sweep,
                                             const ReflectionOrdering& ord);

struct CongruenceBucket {
  std::size_t size = 0;
  int length = 0;
  std::string representative;  // "group u v"
  std::vector<std::string> rtildes;  // distinct values, sorted
};

struct CongruenceReport {
  int max_length = 0;
  std::size_t intervals = 0;
  std::vector<CongruenceBucket> buckets;
  /// Buckets whose values disagree beyond what is allowed for their length.
  std::vector<std::size_t> discrepancies;
};

/// Buckets all intervals of length 1..max_length by poset isomorphism type and
/// compares the R-tilde polynomials in each bucket: exactly up to length 8,
/// modulo q^8 for type A pools and q^7 otherwise beyond.
CongruenceReport congruence_check(std::span<const GroupPtr> groups, int max_length,
                                  std::size_t interval_cap = 10'000);

/// Length-3 intervals whose poset is the 5-crown.
std::vector<std::pair<Elem, Elem>> five_crown_search(const CoxeterGroup& g);

}  // namespace bflip
