#pragma once

// Sweep orchestration: prime sieving, parameter grids, parallel execution
// and deterministic aggregation of verdicts.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gctc/congruences.hpp"
#include "gctc/identities.hpp"

namespace gctc {

enum class MMode { kAutoSolve, kExplicit };
enum class ReportFormat { kJson, kCsv };

std::string_view to_string(MMode mode) noexcept;
std::string_view to_string(ReportFormat format) noexcept;
MMode parse_m_mode(std::string_view text);
ReportFormat parse_format(std::string_view text);

struct ParamGrid {
  std::int64_t b_min = -4;
  std::int64_t b_max = 4;
  std::int64_t c_min = -4;
  std::int64_t c_max = 4;
};

struct SweepConfig {
  std::vector<std::string> checks;  // empty: every known check
  std::uint64_t prime_min = 3;
  std::uint64_t prime_max = 100;
  // Explicit (b, c) list; the grid is used when this is empty.
  std::vector<std::pair<std::int64_t, std::int64_t>> params;
  ParamGrid grid;
  MMode m_mode = MMode::kAutoSolve;
  std::vector<std::int64_t> m_values;
  // Sun-Tauraso t range; t_max == 0 means every t in [t_min, p).
  std::int64_t t_min = 1;
  std::int64_t t_max = 0;
  unsigned threads = 1;
  std::string output;
  ReportFormat format = ReportFormat::kJson;
};

// Check ids understood by run_sweep, in report order.
const std::vector<std::string>& known_checks();

// Throws kInvalidArgument / kUnknownCheck.
void validate(const SweepConfig& config);

// Applies `key = value` lines ('#' starts a comment) on top of `base`.
SweepConfig parse_config_text(std::string_view text, SweepConfig base = {});
SweepConfig load_config_file(const std::string& path, SweepConfig base = {});

std::vector<std::pair<std::int64_t, std::int64_t>> expand_params(const SweepConfig& config);

// Primes in [lo, hi], ascending; 2 <= lo <= hi <= 10^8. An empty range
// (lo > hi) is not an error for sweeps, but is for this function.
std::vector<std::uint64_t> sieve_primes(std::uint64_t lo, std::uint64_t hi);

struct SweepSummary {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

struct SweepReport {
  SweepConfig config;
  std::vector<CheckVerdict> verdicts;
  SweepSummary summary;
  double wall_seconds = 0.0;  // not part of the emitted report
};

SweepReport run_sweep(const SweepConfig& config);

// Dispatches one check by id; parameters not used by the check are ignored,
// missing required ones throw kInvalidArgument.
CheckVerdict run_check(std::string_view name, std::uint64_t p, std::optional<std::int64_t> b,
                       std::optional<std::int64_t> c, std::optional<std::int64_t> m,
                       std::optional<std::int64_t> t);

std::string emit_report(const SweepReport& report, ReportFormat format);

// Identity suites -------------------------------------------------------------

struct IdentitySweepConfig {
  std::vector<std::string> suites;  // empty: all
  unsigned n_max = 30;
  ParamGrid grid;
  // Fixed rational sample points; further points are appended per identity
  // until the count exceeds the degree in x of the cleared identity.
  std::vector<BigRat> x_samples;
  std::vector<std::pair<std::int64_t, std::int64_t>> md_pairs;  // for lemma4
  std::uint64_t p_max = 200;
  unsigned threads = 1;
};

const std::vector<std::string>& known_identity_suites();
std::vector<BigRat> default_x_samples();

// `count` distinct sample points starting with `fixed`, never -1.
std::vector<BigRat> extend_samples(const std::vector<BigRat>& fixed, std::size_t count);

struct IdentitySweepResult {
  std::vector<IdentityReport> reports;
  std::size_t pass = 0;
  std::size_t fail = 0;
};

IdentitySweepResult run_identity_sweep(const IdentitySweepConfig& config);

std::string emit_identity_report(const IdentitySweepResult& result, ReportFormat format);

}  // namespace gctc
