#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "debate/interpreted_system.hpp"

namespace debate {

struct BenchBucket {
  std::size_t n = 0;
  double p_low = 0.0;
  double p_high = 1.0;
  std::size_t instances = 1;
};

/// Engines: fixpoint, sl-grounded, sl-admissible, sl-ideal, oracle (grounded
/// membership), oracle-admissible, oracle-ideal.
struct BenchConfig {
  std::vector<BenchBucket> buckets;
  std::uint64_t seed = 1;
  double timeout_s = 1800.0;
  std::vector<std::string> engines{"fixpoint", "oracle"};
  StateSpace space = StateSpace::Collapsed;
  std::size_t max_states = 4'000'000;
  unsigned jobs = 1;
};

/// `key = value` lines, `#` comments. Keys: seed, timeout, engines (comma
/// list), state_space (full | collapsed), max_states, jobs, and repeated
/// `bucket = N P_LOW P_HIGH INSTANCES`. Throws std::invalid_argument.
BenchConfig parse_bench_config(std::string_view text);
void validate(const BenchConfig& cfg);

struct BenchRecord {
  std::size_t n = 0;
  double p_low = 0.0;
  double p_high = 0.0;
  std::size_t instance = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string root;
  std::string engine;
  std::string semantics;  // grounded | admissible | ideal
  std::string result;     // true | false | empty when status != ok
  double reach_s = 0.0;
  double mc_s = 0.0;
  double total_s = 0.0;
  std::string status;  // ok | timeout | resource
};

/// Deterministic in cfg.seed apart from timing fields; records ordered by
/// bucket, instance, then configured engine order.
std::vector<BenchRecord> run_bench(const BenchConfig& cfg);

/// Pairs of ok records on the same instance and semantics whose results differ.
std::size_t count_disagreements(const std::vector<BenchRecord>& records);

struct SummaryRow {
  std::size_t n = 0;
  double p_low = 0.0;
  double p_high = 0.0;
  std::string engine;
  std::size_t instances = 0;
  std::size_t ok = 0;
  double avg_exec_s = 0.0;
  double avg_reach_s = 0.0;
  double avg_mc_s = 0.0;
  double avg_oracle_s = 0.0;
  std::size_t oracle_ok = 0;
  std::size_t timeouts = 0;
};

/// One row per (n, p bucket, checking engine). Averages over ok records;
/// non-ok records only count as timeouts. Throws on empty input.
std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records);

std::string records_csv(const std::vector<BenchRecord>& records);
std::string summary_csv(const std::vector<SummaryRow>& rows);
std::string summary_markdown(const std::vector<SummaryRow>& rows);

/// Writes records.csv, summary.csv and summary.md into `dir` (created if
/// missing).
void write_bench_outputs(const std::string& dir, const std::vector<BenchRecord>& records);

}  // namespace debate
