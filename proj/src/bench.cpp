#include "debate/bench.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <random>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "debate/apx.hpp"
#include "debate/checker.hpp"
#include "debate/formula.hpp"
#include "debate/semantics.hpp"

namespace debate {

namespace {

const std::vector<std::string> kEngines{"fixpoint",   "sl-grounded",       "sl-admissible",
                                        "sl-ideal",   "oracle",            "oracle-admissible",
                                        "oracle-ideal"};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string semantics_of(const std::string& engine) {
  if (engine.ends_with("admissible")) return "admissible";
  if (engine.ends_with("ideal")) return "ideal";
  return "grounded";
}

bool is_oracle(const std::string& engine) { return engine.starts_with("oracle"); }

double unit(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

std::string fmt_p(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", x);
  return buf;
}

}  // namespace

void validate(const BenchConfig& cfg) {
  if (cfg.buckets.empty()) throw std::invalid_argument("bench config needs at least one bucket");
  for (const auto& b : cfg.buckets) {
    if (b.n == 0) throw std::invalid_argument("bucket needs n >= 1");
    if (!(0.0 <= b.p_low && b.p_low < b.p_high && b.p_high <= 1.0)) {
      throw std::invalid_argument("bucket needs 0 <= p_low < p_high <= 1");
    }
    if (b.instances == 0) throw std::invalid_argument("bucket needs at least one instance");
  }
  if (cfg.engines.empty()) throw std::invalid_argument("bench config needs an engine");
  for (const auto& e : cfg.engines) {
    if (std::find(kEngines.begin(), kEngines.end(), e) == kEngines.end()) {
      throw std::invalid_argument("unknown engine '" + e + "'");
    }
  }
  if (!(cfg.timeout_s > 0)) throw std::invalid_argument("timeout must be positive");
  if (cfg.jobs == 0) throw std::invalid_argument("jobs must be at least 1");
}

BenchConfig parse_bench_config(std::string_view text) {
  BenchConfig cfg;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(lineno) + ": expected key = value");
    }
    const std::string key = trim(std::string_view(body).substr(0, eq));
    const std::string value = trim(std::string_view(body).substr(eq + 1));
    auto bad = [&](const std::string& why) {
      return std::invalid_argument("config line " + std::to_string(lineno) + ": " + why);
    };
    try {
      if (key == "seed") {
        cfg.seed = std::stoull(value);
      } else if (key == "timeout") {
        cfg.timeout_s = std::stod(value);
      } else if (key == "max_states") {
        cfg.max_states = std::stoull(value);
      } else if (key == "jobs") {
        cfg.jobs = static_cast<unsigned>(std::stoul(value));
      } else if (key == "state_space") {
        if (value == "full") {
          cfg.space = StateSpace::Full;
        } else if (value == "collapsed") {
          cfg.space = StateSpace::Collapsed;
        } else {
          throw bad("state_space is full or collapsed");
        }
      } else if (key == "engines") {
        cfg.engines.clear();
        std::istringstream list(value);
        std::string item;
        while (std::getline(list, item, ',')) {
          if (!trim(item).empty()) cfg.engines.push_back(trim(item));
        }
      } else if (key == "bucket") {
        std::istringstream fields(value);
        BenchBucket b;
        if (!(fields >> b.n >> b.p_low >> b.p_high >> b.instances)) {
          throw bad("bucket is N P_LOW P_HIGH INSTANCES");
        }
        std::string extra;
        if (fields >> extra) throw bad("bucket has trailing fields");
        cfg.buckets.push_back(b);
      } else {
        throw bad("unknown key '" + key + "'");
      }
    } catch (const std::logic_error& e) {
      if (dynamic_cast<const std::invalid_argument*>(&e) &&
          std::string_view(e.what()).starts_with("config line")) {
        throw;
      }
      throw bad("bad value '" + value + "' for " + key);
    }
  }
  validate(cfg);
  return cfg;
}

namespace {

struct Instance {
  std::size_t bucket;
  std::size_t index;
  double p;
  std::uint64_t seed;
  std::size_t root_index;
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

BenchRecord run_engine(const BenchConfig& cfg, const Instance& inst,
                       const ArgumentationFramework& af, ArgId root, const std::string& engine) {
  const BenchBucket& b = cfg.buckets[inst.bucket];
  BenchRecord r;
  r.n = b.n;
  r.p_low = b.p_low;
  r.p_high = b.p_high;
  r.instance = inst.index;
  r.p = inst.p;
  r.seed = inst.seed;
  r.root = af.name(root);
  r.engine = engine;
  r.semantics = semantics_of(engine);

  const auto t0 = Clock::now();
  auto finish = [&](CheckResult res) {
    r.total_s = since(t0);
    if (res == CheckResult::True || res == CheckResult::False) {
      r.status = "ok";
      r.result = std::string(to_string(res));
    } else {
      r.status = res == CheckResult::Timeout ? "timeout" : "resource";
    }
  };

  if (is_oracle(engine)) {
    try {
      const SemanticsKind kind = r.semantics == "grounded"     ? SemanticsKind::Grounded
                                 : r.semantics == "admissible" ? SemanticsKind::Admissible
                                                               : SemanticsKind::Ideal;
      const bool yes = accepted(af, root, kind);
      r.mc_s = since(t0);
      finish(yes ? CheckResult::True : CheckResult::False);
    } catch (const ResourceError&) {
      finish(CheckResult::ResourceExceeded);
    }
    return r;
  }

  try {
    const InterpretedSystem is =
        build_interpreted_system(af, root, BuildOptions{cfg.space, cfg.max_states});
    r.reach_s = is.build_seconds();
    Verdict v;
    if (engine == "fixpoint") {
      v = check_grounded_fixpoint(is);
    } else {
      const FormulaPtr f = r.semantics == "grounded"     ? grounded_formula(af)
                           : r.semantics == "admissible" ? admissible_formula(af)
                                                         : ideal_formula(af);
      const double left = std::max(0.001, cfg.timeout_s - since(t0));
      v = check(is, f, Budget{left, std::numeric_limits<std::uint64_t>::max()});
    }
    r.mc_s = v.mc_s;
    CheckResult res = v.result;
    if (since(t0) > cfg.timeout_s &&
        (res == CheckResult::True || res == CheckResult::False)) {
      res = CheckResult::Timeout;
    }
    finish(res);
  } catch (const ResourceError&) {
    finish(CheckResult::ResourceExceeded);
  }
  return r;
}

}  // namespace

std::vector<BenchRecord> run_bench(const BenchConfig& cfg) {
  validate(cfg);
  std::mt19937_64 rng(cfg.seed);
  std::vector<Instance> instances;
  for (std::size_t bi = 0; bi < cfg.buckets.size(); ++bi) {
    const auto& b = cfg.buckets[bi];
    for (std::size_t i = 0; i < b.instances; ++i) {
      Instance inst{bi, i, 0.0, 0, 0};
      inst.seed = rng();
      inst.p = b.p_low + (b.p_high - b.p_low) * unit(rng);
      inst.root_index = static_cast<std::size_t>(rng() % b.n);
      instances.push_back(inst);
    }
  }

  std::vector<std::vector<BenchRecord>> out(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < instances.size(); k = next++) {
      const Instance& inst = instances[k];
      const auto af = generate_random(cfg.buckets[inst.bucket].n, inst.p, inst.seed);
      const auto root = static_cast<ArgId>(inst.root_index);
      for (const auto& e : cfg.engines) out[k].push_back(run_engine(cfg, inst, af, root, e));
    }
  };
  const unsigned jobs = std::min<unsigned>(cfg.jobs, static_cast<unsigned>(instances.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  std::vector<BenchRecord> records;
  for (auto& group : out) {
    for (auto& r : group) records.push_back(std::move(r));
  }
  return records;
}

std::size_t count_disagreements(const std::vector<BenchRecord>& records) {
  std::map<std::tuple<std::size_t, double, double, std::size_t, std::string>,
           std::vector<const BenchRecord*>>
      groups;
  for (const auto& r : records) {
    if (r.status == "ok") groups[{r.n, r.p_low, r.p_high, r.instance, r.semantics}].push_back(&r);
  }
  std::size_t bad = 0;
  for (const auto& [key, rs] : groups) {
    for (std::size_t i = 0; i < rs.size(); ++i) {
      for (std::size_t j = i + 1; j < rs.size(); ++j) {
        if (rs[i]->result != rs[j]->result) ++bad;
      }
    }
  }
  return bad;
}

std::vector<SummaryRow> summarize(const std::vector<BenchRecord>& records) {
  if (records.empty()) throw std::invalid_argument("no bench records to summarize");
  using Key = std::tuple<std::size_t, double, double>;
  std::vector<SummaryRow> rows;
  std::map<std::tuple<std::size_t, double, double, std::string>, std::size_t> index;
  // Oracle timings per (bucket, semantics).
  std::map<std::tuple<std::size_t, double, double, std::string>, std::pair<double, std::size_t>>
      oracle;
  for (const auto& r : records) {
    if (is_oracle(r.engine)) {
      auto& [sum, count] = oracle[{r.n, r.p_low, r.p_high, r.semantics}];
      if (r.status == "ok") {
        sum += r.total_s;
        ++count;
      }
    }
  }
  bool any_checker = std::any_of(records.begin(), records.end(),
                                 [](const BenchRecord& r) { return !is_oracle(r.engine); });
  for (const auto& r : records) {
    if (any_checker && is_oracle(r.engine)) continue;
    const auto key = std::make_tuple(r.n, r.p_low, r.p_high, r.engine);
    auto it = index.find(key);
    if (it == index.end()) {
      it = index.emplace(key, rows.size()).first;
      SummaryRow row;
      row.n = r.n;
      row.p_low = r.p_low;
      row.p_high = r.p_high;
      row.engine = r.engine;
      const auto o = oracle.find({r.n, r.p_low, r.p_high, r.semantics});
      if (o != oracle.end() && o->second.second > 0) {
        row.avg_oracle_s = o->second.first / static_cast<double>(o->second.second);
        row.oracle_ok = o->second.second;
      }
      rows.push_back(row);
    }
    SummaryRow& row = rows[it->second];
    ++row.instances;
    if (r.status == "ok") {
      ++row.ok;
      row.avg_exec_s += r.total_s;
      row.avg_reach_s += r.reach_s;
      row.avg_mc_s += r.mc_s;
    } else {
      ++row.timeouts;
    }
  }
  for (auto& row : rows) {
    if (row.ok > 0) {
      const auto k = static_cast<double>(row.ok);
      row.avg_exec_s /= k;
      row.avg_reach_s /= k;
      row.avg_mc_s /= k;
    }
  }
  std::stable_sort(rows.begin(), rows.end(), [](const SummaryRow& a, const SummaryRow& b) {
    return Key{a.n, a.p_low, a.p_high} < Key{b.n, b.p_low, b.p_high};
  });
  return rows;
}

std::string records_csv(const std::vector<BenchRecord>& records) {
  std::string out =
      "n,p_low,p_high,instance,p,seed,root,engine,semantics,result,reach_s,mc_s,total_s,status\n";
  for (const auto& r : records) {
    out += std::to_string(r.n) + "," + fmt_p(r.p_low) + "," + fmt_p(r.p_high) + "," +
           std::to_string(r.instance) + "," + fmt(r.p) + "," + std::to_string(r.seed) + "," +
           r.root + "," + r.engine + "," + r.semantics + "," + r.result + "," + fmt(r.reach_s) +
           "," + fmt(r.mc_s) + "," + fmt(r.total_s) + "," + r.status + "\n";
  }
  return out;
}

namespace {

std::string avg_or_blank(const SummaryRow& row, double v) { return row.ok ? fmt(v) : ""; }

std::string p_range(const SummaryRow& row) {
  return fmt_p(row.p_low) + " <= p < " + fmt_p(row.p_high);
}

}  // namespace

std::string summary_csv(const std::vector<SummaryRow>& rows) {
  std::string out =
      "n,p_low,p_high,engine,instances,avg_exec_s,avg_reach_s,avg_mc_s,avg_oracle_s,timeouts\n";
  for (const auto& row : rows) {
    out += std::to_string(row.n) + "," + fmt_p(row.p_low) + "," + fmt_p(row.p_high) + "," +
           row.engine + "," + std::to_string(row.instances) + "," +
           avg_or_blank(row, row.avg_exec_s) + "," + avg_or_blank(row, row.avg_reach_s) + "," +
           avg_or_blank(row, row.avg_mc_s) + "," + (row.oracle_ok ? fmt(row.avg_oracle_s) : "") +
           "," + std::to_string(row.timeouts) + "\n";
  }
  return out;
}

std::string summary_markdown(const std::vector<SummaryRow>& rows) {
  const std::vector<std::string> head{"n",
                                      "p range",
                                      "engine",
                                      "instances",
                                      "avg exec (s)",
                                      "avg reachability (s)",
                                      "avg model checking (s)",
                                      "avg oracle (s)",
                                      "timeouts"};
  std::vector<std::vector<std::string>> cells{head};
  for (const auto& row : rows) {
    cells.push_back({std::to_string(row.n), p_range(row), row.engine,
                     std::to_string(row.instances), avg_or_blank(row, row.avg_exec_s),
                     avg_or_blank(row, row.avg_reach_s), avg_or_blank(row, row.avg_mc_s),
                     row.oracle_ok ? fmt(row.avg_oracle_s) : "", std::to_string(row.timeouts)});
  }
  std::vector<std::size_t> width(head.size(), 3);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  }
  auto emit = [&](const std::vector<std::string>& line) {
    std::string s = "|";
    for (std::size_t c = 0; c < line.size(); ++c) {
      s += " " + line[c] + std::string(width[c] - line[c].size(), ' ') + " |";
    }
    return s + "\n";
  };
  std::string out = emit(cells[0]);
  out += "|";
  for (auto w : width) out += std::string(w + 2, '-') + "|";
  out += "\n";
  for (std::size_t i = 1; i < cells.size(); ++i) out += emit(cells[i]);
  return out;
}

void write_bench_outputs(const std::string& dir, const std::vector<BenchRecord>& records) {
  std::filesystem::create_directories(dir);
  const auto rows = summarize(records);
  auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream f(std::filesystem::path(dir) / name);
    if (!f) throw std::runtime_error("cannot write " + (std::filesystem::path(dir) / name).string());
    f << body;
  };
  write("records.csv", records_csv(records));
  write("summary.csv", summary_csv(rows));
  write("summary.md", summary_markdown(rows));
}

}  // namespace debate
