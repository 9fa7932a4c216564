#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "debate/bench.hpp"

using namespace debate;

namespace {

BenchRecord record(std::string engine, std::string status, std::string result, double t) {
  BenchRecord r;
  r.n = 5;
  r.p_low = 0.0;
  r.p_high = 0.5;
  r.engine = std::move(engine);
  r.semantics = "grounded";
  r.status = std::move(status);
  r.result = std::move(result);
  r.reach_s = t / 4;
  r.mc_s = t / 2;
  r.total_s = t;
  return r;
}

std::vector<BenchRecord> strip_timing(std::vector<BenchRecord> rs) {
  for (auto& r : rs) r.reach_s = r.mc_s = r.total_s = 0.0;
  return rs;
}

bool same_records(const std::vector<BenchRecord>& a, const std::vector<BenchRecord>& b) {
  return records_csv(strip_timing(a)) == records_csv(strip_timing(b));
}

}  // namespace

TEST_CASE("config parsing") {
  const auto cfg = parse_bench_config(
      "# two sizes, two buckets\n"
      "seed = 7\n"
      "timeout = 30\n"
      "engines = fixpoint, oracle, sl-grounded\n"
      "state_space = full\n"
      "jobs = 2\n"
      "bucket = 20 0.0 0.5 10   # low\n"
      "bucket = 20 0.5 1.0 10\n");
  CHECK(cfg.seed == 7);
  CHECK(cfg.timeout_s == 30.0);
  CHECK(cfg.engines == std::vector<std::string>{"fixpoint", "oracle", "sl-grounded"});
  CHECK(cfg.space == StateSpace::Full);
  CHECK(cfg.jobs == 2);
  REQUIRE(cfg.buckets.size() == 2);
  CHECK(cfg.buckets[1].n == 20);
  CHECK(cfg.buckets[1].p_low == 0.5);
  CHECK(cfg.buckets[1].instances == 10);
}

TEST_CASE("config rejects invalid buckets and keys") {
  CHECK_THROWS_AS(parse_bench_config("bucket = 5 0.0 0.5 0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bench_config("bucket = 5 0.6 0.5 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bench_config("bucket = 5 0.0 1.5 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bench_config("bucket = 5 0.0\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bench_config("seed = 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bench_config("colour = red\nbucket = 5 0 1 1\n"), std::invalid_argument);
  CHECK_THROWS_AS(parse_bench_config("engines = bdd\nbucket = 5 0 1 1\n"),
                  std::invalid_argument);
  CHECK_THROWS_AS(parse_bench_config("seed = x\nbucket = 5 0 1 1\n"), std::invalid_argument);
  BenchConfig cfg;
  cfg.buckets = {{5, 0.0, 0.5, 0}};
  CHECK_THROWS_AS(run_bench(cfg), std::invalid_argument);
}

TEST_CASE("bench runs are seeded and engines agree") {
  BenchConfig cfg;
  cfg.seed = 11;
  cfg.engines = {"fixpoint", "oracle", "sl-grounded", "sl-admissible", "oracle-admissible"};
  cfg.buckets = {{5, 0.0, 0.5, 3}, {5, 0.5, 1.0, 3}};
  const auto a = run_bench(cfg);
  REQUIRE(a.size() == 6 * 5);
  CHECK(count_disagreements(a) == 0);
  for (const auto& r : a) {
    CHECK(r.status == "ok");
    CHECK(r.p >= r.p_low);
    CHECK(r.p < r.p_high);
    CHECK(r.total_s >= r.reach_s + r.mc_s - 1e-9);
  }
  CHECK(same_records(a, run_bench(cfg)));
  cfg.jobs = 3;
  CHECK(same_records(a, run_bench(cfg)));
  cfg.seed = 12;
  CHECK_FALSE(same_records(a, run_bench(cfg)));
}

TEST_CASE("disagreements are counted per instance and semantics") {
  auto x = record("fixpoint", "ok", "true", 1.0);
  auto y = record("oracle", "ok", "false", 1.0);
  CHECK(count_disagreements({x, y}) == 1);
  y.semantics = "admissible";
  CHECK(count_disagreements({x, y}) == 0);
  auto z = record("oracle", "timeout", "", 1.0);
  CHECK(count_disagreements({x, z}) == 0);
}

TEST_CASE("summary of a single record is that record") {
  const auto rows = summarize({record("fixpoint", "ok", "true", 2.0)});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].avg_exec_s == 2.0);
  CHECK(rows[0].avg_reach_s == 0.5);
  CHECK(rows[0].avg_mc_s == 1.0);
  CHECK(rows[0].timeouts == 0);
  CHECK_THROWS_AS(summarize({}), std::invalid_argument);
}

TEST_CASE("all-timeout summary has empty averages") {
  const auto rows = summarize({record("sl-grounded", "timeout", "", 9.0),
                               record("sl-grounded", "resource", "", 9.0)});
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].timeouts == 2);
  CHECK(rows[0].ok == 0);
  const std::string csv = summary_csv(rows);
  CHECK(csv.find("5,0.00,0.50,sl-grounded,2,,,,,2\n") != std::string::npos);
}

TEST_CASE("two-size run yields one row per size and bucket") {
  BenchConfig cfg;
  cfg.engines = {"fixpoint", "oracle"};
  cfg.buckets = {{20, 0.0, 0.5, 2}, {20, 0.5, 1.0, 2}, {40, 0.0, 0.5, 2}, {40, 0.5, 1.0, 2}};
  const auto records = run_bench(cfg);
  CHECK(count_disagreements(records) == 0);
  const auto rows = summarize(records);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].n == 20);
  CHECK(rows[3].n == 40);
  for (const auto& row : rows) {
    CHECK(row.engine == "fixpoint");
    CHECK(row.oracle_ok == 2);
  }
  const std::string md = summary_markdown(rows);
  CHECK(md.find("avg reachability (s)") != std::string::npos);
  CHECK(md.find("avg model checking (s)") != std::string::npos);
  CHECK(md.find("0.50 <= p < 1.00") != std::string::npos);

  const auto dir = std::filesystem::temp_directory_path() / "debate_bench_test";
  std::filesystem::remove_all(dir);
  write_bench_outputs(dir.string(), records);
  CHECK(std::filesystem::exists(dir / "records.csv"));
  CHECK(std::filesystem::exists(dir / "summary.md"));
  std::ifstream in(dir / "records.csv");
  std::string header;
  std::getline(in, header);
  CHECK(header ==
        "n,p_low,p_high,instance,p,seed,root,engine,semantics,result,reach_s,mc_s,total_s,status");
  std::filesystem::remove_all(dir);
}

TEST_CASE("state caps surface as resource records") {
  BenchConfig cfg;
  cfg.engines = {"fixpoint", "oracle"};
  cfg.space = StateSpace::Full;
  cfg.max_states = 5;
  cfg.buckets = {{8, 0.6, 0.9, 2}};
  const auto records = run_bench(cfg);
  for (const auto& r : records) {
    if (r.engine == "fixpoint") CHECK(r.status == "resource");
    if (r.engine == "oracle") CHECK(r.status == "ok");
  }
}
