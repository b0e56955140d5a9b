#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "bruhat_flip/group.hpp"
#include "bruhat_flip/reflection_order.hpp"
#include "bruhat_flip/verifier.hpp"

namespace bflip {

/// Library version string.
std::string version();

std::uint64_t fnv1a64(std::string_view bytes);
std::string hex64(std::uint64_t v);

/// Provenance header embedded into every report.
struct ReportHeader {
  std::string tool = "bruhat-flip";
  std::string version;
  std::string invocation;
  /// Canonical configuration text; its hash is reported alongside.
  std::string config;
};

std::string config_hash(const ReportHeader& h);

/// CSV with one line per row; header line names the columns.
std::string table1_csv(const std::vector<StatsRow>& rows);
std::vector<StatsRow> parse_table1_csv(std::string_view text);

std::string gamma_json(const GammaTable& table, const ReportHeader& header);
/// Inverse of gamma_json (header ignored). Throws ParseError.
GammaTable parse_gamma_json(std::string_view text);

std::string violations_json(const std::vector<ViolationRecord>& v, const ReportHeader& header);
std::string congruence_json(const CongruenceReport& r, const ReportHeader& header);

/// Cache file for a sweep, keyed by diagram, h, ordering and reductions.
std::string sweep_cache_path(const std::string& dir, const CoxeterGroup& g, int h,
                             const ReflectionOrdering& ord, const SweepOptions& opts);
/// False when the file is missing or unreadable.
bool load_sweep(const std::string& path, const CoxeterGroup& g, SweepResult& out);
/// Writes atomically (temporary file, then rename). Throws Error on I/O failure.
void save_sweep(const std::string& path, const SweepResult& s);

/// Writes `text` to `path`, creating parent directories. Throws Error.
void write_file(const std::string& path, std::string_view text);

}  // namespace bflip
