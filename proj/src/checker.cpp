#include "debate/checker.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace debate {

ActionId PositionalStrategy::action_at(StateId s) const {
  auto it = std::lower_bound(table.begin(), table.end(), s,
                             [](const auto& entry, StateId x) { return entry.first < x; });
  if (it != table.end() && it->first == s) return it->second;
  return ActionId::nothing();
}

namespace {

/// Index of `a` among the moves at s, or -1.
int move_index(const InterpretedSystem& is, StateId s, ActionId a) {
  const auto moves = is.moves(s);
  for (std::size_t i = 0; i < moves.size(); ++i) {
    if (moves[i].action == a) return static_cast<int>(i);
  }
  return -1;
}

}  // namespace

void validate_strategy(const InterpretedSystem& is, const PositionalStrategy& f) {
  const auto& points = is.decision_points(f.agent);
  if (f.table.size() != points.size()) {
    throw std::invalid_argument("strategy does not cover exactly the agent's decision points");
  }
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (f.table[i].first != points[i] || move_index(is, points[i], f.table[i].second) < 0) {
      throw std::invalid_argument("strategy chooses a disabled action at state " +
                                  std::to_string(points[i]));
    }
  }
}

std::string format_positional(const InterpretedSystem& is, const PositionalStrategy& f) {
  const auto& af = is.framework();
  std::string out;
  for (const auto& [s, a] : f.table) {
    const GlobalState g = is.state(s);
    const ArgId local = f.agent == Agent::Pro ? g.pro : g.opp;
    out += "(" + af.name(local) + ", " + (g.env.turn == Turn::Pro ? "Pro" : "Opp") + ", " +
           af.name(g.env.last) + ") -> " + format_action(af, a) + "\n";
  }
  return out;
}

void Assignment::bind(const StrategyVariable& v, PositionalStrategy f) {
  if (v.agent != f.agent) throw std::invalid_argument("variable and strategy agents differ");
  slot_[static_cast<std::size_t>(v.agent)] = std::make_pair(v.name, std::move(f));
}

const PositionalStrategy* Assignment::strategy_for(Agent a) const {
  const auto& s = slot_[static_cast<std::size_t>(a)];
  return s ? &s->second : nullptr;
}

const std::string* Assignment::variable_for(Agent a) const {
  const auto& s = slot_[static_cast<std::size_t>(a)];
  return s ? &s->first : nullptr;
}

bool Assignment::complete() const {
  return std::all_of(slot_.begin(), slot_.end(), [](const auto& s) { return s.has_value(); });
}

Lasso play(const InterpretedSystem& is, const Assignment& chi, StateId s) {
  if (!chi.complete()) throw std::invalid_argument("play needs a complete assignment");
  std::vector<std::size_t> position(is.state_count(), SIZE_MAX);
  Lasso out;
  StateId cur = s;
  while (position[cur] == SIZE_MAX) {
    position[cur] = out.prefix.size();
    out.prefix.push_back(cur);
    const auto who = is.mover(cur);
    if (!who) continue;  // terminal self-loop closes the lasso next round
    const int idx = move_index(is, cur, chi.strategy_for(*who)->action_at(cur));
    if (idx < 0) throw std::invalid_argument("strategy plays a disabled action");
    cur = is.moves(cur)[static_cast<std::size_t>(idx)].to;
  }
  out.cycle_start = position[cur];
  return out;
}

std::string_view to_string(CheckResult r) {
  switch (r) {
    case CheckResult::True: return "true";
    case CheckResult::False: return "false";
    case CheckResult::Timeout: return "timeout";
    case CheckResult::ResourceExceeded: return "resource";
  }
  return "?";
}

// ---------------------------------------------------------------- SL engine

namespace {

using Clock = std::chrono::steady_clock;

struct BudgetExceeded {
  CheckResult kind;
};

// (frame depth, state) packed; the search reads and assigns these points.
using Point = std::uint32_t;
constexpr unsigned kStateBits = 24;
constexpr Point kNoPoint = ~Point{0};
constexpr Point make_point(std::size_t depth, StateId s) {
  return static_cast<Point>((depth << kStateBits) | s);
}
constexpr std::size_t depth_of(Point p) { return p >> kStateBits; }
constexpr StateId state_of(Point p) { return p & ((Point{1} << kStateBits) - 1); }

enum class Tri : std::uint8_t { False, True, Unknown };

/// Three-valued result. A definite value carries the points it was derived
/// from; it holds for every completion of the partial strategies that
/// agrees on those points. Unknown names the unassigned point to branch on.
struct Value {
  Tri t = Tri::False;
  Point need = kNoPoint;
  std::vector<Point> reason;
};

void merge_into(std::vector<Point>& into, const std::vector<Point>& add) {
  if (add.empty()) return;
  if (into.empty()) {
    into = add;
    return;
  }
  std::vector<Point> out;
  out.reserve(into.size() + add.size());
  std::set_union(into.begin(), into.end(), add.begin(), add.end(), std::back_inserter(out));
  into.swap(out);
}

void insert_point(std::vector<Point>& into, Point p) {
  auto it = std::lower_bound(into.begin(), into.end(), p);
  if (it == into.end() || *it != p) into.insert(it, p);
}

struct Node {
  FormulaKind kind = FormulaKind::True;
  int a = -1;
  int b = -1;
  Atom atom{};
  Agent agent = Agent::Pro;
  bool closed = false;
};

/// Flattened core-grammar formula with atoms resolved against a framework.
struct Program {
  std::vector<Node> nodes;
  int root = -1;

  Program(const FormulaPtr& normalized, const ArgumentationFramework& af) {
    root = compile(*normalized, af).first;
  }

 private:
  std::pair<int, AgentSet> compile(const Formula& f, const ArgumentationFramework& af) {
    Node n;
    n.kind = f.kind();
    AgentSet free = 0;
    switch (f.kind()) {
      case FormulaKind::True:
        break;
      case FormulaKind::Atom:
        if (!af.contains(f.atom_arg())) {
          throw std::invalid_argument("formula names unknown argument '" + f.atom_arg() + "'");
        }
        n.atom = Atom{f.atom_owner(), af.id(f.atom_arg())};
        break;
      case FormulaKind::Not: {
        auto [a, fa] = compile(*f.body(), af);
        n.a = a;
        free = fa;
        break;
      }
      case FormulaKind::Or:
      case FormulaKind::Until: {
        auto [a, fa] = compile(*f.lhs(), af);
        auto [b, fb] = compile(*f.rhs(), af);
        n.a = a;
        n.b = b;
        free = AgentSet(fa | fb | (f.kind() == FormulaKind::Until ? kAllAgents : 0));
        break;
      }
      case FormulaKind::Next:
      case FormulaKind::Globally: {
        n.a = compile(*f.body(), af).first;
        free = kAllAgents;
        break;
      }
      case FormulaKind::Exists: {
        auto [a, fa] = compile(*f.body(), af);
        n.a = a;
        n.agent = f.variable().agent;
        free = AgentSet(fa & ~agent_bit(n.agent));
        break;
      }
      default:
        throw std::logic_error("formula is not in core form");
    }
    n.closed = free == 0;
    nodes.push_back(n);
    return {static_cast<int>(nodes.size() - 1), free};
  }
};

class Engine {
 public:
  Engine(const InterpretedSystem& is, const Program& prog, const Budget& budget)
      : is_(is),
        prog_(prog),
        budget_(budget),
        deadline_(std::isinf(budget.wall_seconds)
                      ? Clock::time_point::max()
                      : Clock::now() + std::chrono::duration_cast<Clock::duration>(
                                           std::chrono::duration<double>(budget.wall_seconds))),
        mark_(is.state_count(), 0),
        mark_pos_(is.state_count(), 0),
        memo_(prog.nodes.size()) {
    if (is.state_count() >= (std::size_t{1} << kStateBits)) {
      throw ResourceError("too many states for the strategy search");
    }
    binding_.fill(-1);
  }

  bool capture_outermost = false;
  std::optional<PositionalStrategy> witness;
  std::uint64_t strategies = 0;
  std::uint64_t visited = 0;

  /// Binds `agent` to a fully specified strategy for the whole evaluation.
  void preset(const PositionalStrategy& f) {
    const std::size_t d = push_frame(f.agent);
    for (StateId s : is_.decision_points(f.agent)) {
      const int idx = move_index(is_, s, f.action_at(s));
      if (idx < 0) throw std::invalid_argument("strategy plays a disabled action");
      frames_[d].table[s] = static_cast<std::int16_t>(idx);
      frames_[d].assigned.push_back(s);
    }
  }

  Value eval(int n, StateId s) {
    const Node& node = prog_.nodes[static_cast<std::size_t>(n)];
    if (node.closed) {
      auto& memo = memo_[static_cast<std::size_t>(n)];
      if (memo.empty()) memo.assign(is_.state_count(), -1);
      if (memo[s] >= 0) return Value{memo[s] ? Tri::True : Tri::False, kNoPoint, {}};
      Value v = eval_uncached(node, s);
      if (v.t == Tri::Unknown) throw std::logic_error("closed subformula depends on an outer strategy");
      memo[s] = v.t == Tri::True ? 1 : 0;
      v.reason.clear();
      return v;
    }
    return eval_uncached(node, s);
  }

 private:
  struct Frame {
    Agent agent;
    std::vector<std::int16_t> table;  // move index per state, -1 unassigned
    std::vector<StateId> assigned;
  };

  struct Path {
    std::vector<StateId> states;
    std::vector<Point> reads;  // reads[i] decides the edge leaving states[i]
    std::size_t cycle = SIZE_MAX;
    Point blocked = kNoPoint;
  };

  std::size_t push_frame(Agent agent) {
    const std::size_t d = frames_.size();
    if (d >= pool_.size()) pool_.emplace_back(is_.state_count(), std::int16_t{-1});
    frames_.push_back(Frame{agent, std::move(pool_[d]), {}});
    binding_saved_.push_back(binding_[static_cast<std::size_t>(agent)]);
    binding_[static_cast<std::size_t>(agent)] = static_cast<int>(d);
    return d;
  }

  void pop_frame() {
    Frame& f = frames_.back();
    for (StateId s : f.assigned) f.table[s] = -1;
    binding_[static_cast<std::size_t>(f.agent)] = binding_saved_.back();
    binding_saved_.pop_back();
    pool_[frames_.size() - 1] = std::move(f.table);
    frames_.pop_back();
  }

  void tick_state() {
    ++visited;
    if ((visited & 0xfff) == 0 && Clock::now() > deadline_) throw BudgetExceeded{CheckResult::Timeout};
  }

  void tick_strategy() {
    if (++strategies > budget_.max_strategies) throw BudgetExceeded{CheckResult::ResourceExceeded};
    if ((strategies & 0xff) == 0 && Clock::now() > deadline_) {
      throw BudgetExceeded{CheckResult::Timeout};
    }
  }

  Value eval_uncached(const Node& node, StateId s) {
    switch (node.kind) {
      case FormulaKind::True:
        return Value{Tri::True, kNoPoint, {}};
      case FormulaKind::Atom:
        return Value{is_.atom_holds(s, node.atom) ? Tri::True : Tri::False, kNoPoint, {}};
      case FormulaKind::Not: {
        Value v = eval(node.a, s);
        if (v.t == Tri::True) {
          v.t = Tri::False;
        } else if (v.t == Tri::False) {
          v.t = Tri::True;
        }
        return v;
      }
      case FormulaKind::Or: {
        Value l = eval(node.a, s);
        if (l.t == Tri::True) return l;
        Value r = eval(node.b, s);
        if (r.t == Tri::True) return r;
        if (l.t == Tri::Unknown) return l;
        if (r.t == Tri::Unknown) return r;
        merge_into(l.reason, r.reason);
        return l;
      }
      case FormulaKind::Next:
      case FormulaKind::Globally:
      case FormulaKind::Until:
        return temporal(node, s);
      case FormulaKind::Exists:
        return quantify(node, s);
      default:
        throw std::logic_error("formula is not in core form");
    }
  }

  Path trace(StateId s) {
    if (++stamp_ == 0) {
      std::fill(mark_.begin(), mark_.end(), 0);
      stamp_ = 1;
    }
    Path p;
    StateId cur = s;
    while (true) {
      if (mark_[cur] == stamp_) {
        p.cycle = mark_pos_[cur];
        return p;
      }
      mark_[cur] = stamp_;
      mark_pos_[cur] = static_cast<std::uint32_t>(p.states.size());
      p.states.push_back(cur);
      tick_state();
      const auto who = is_.mover(cur);
      if (!who) {
        p.reads.push_back(kNoPoint);
        continue;
      }
      const auto d = static_cast<std::size_t>(binding_[static_cast<std::size_t>(*who)]);
      const std::int16_t idx = frames_[d].table[cur];
      if (idx < 0) {
        p.blocked = make_point(d, cur);
        return p;
      }
      p.reads.push_back(make_point(d, cur));
      cur = is_.moves(cur)[static_cast<std::size_t>(idx)].to;
    }
  }

  /// Adds the reads deciding edges 0 .. upto-1.
  static void add_reads(std::vector<Point>& reason, const Path& p, std::size_t upto) {
    for (std::size_t i = 0; i < upto && i < p.reads.size(); ++i) {
      if (p.reads[i] != kNoPoint) insert_point(reason, p.reads[i]);
    }
  }

  Value unknown(Point need) { return Value{Tri::Unknown, need, {}}; }

  Value temporal(const Node& node, StateId s) {
    for (int b : binding_) {
      if (b < 0) throw std::logic_error("assignment incomplete at a temporal operator");
    }
    const Path p = trace(s);
    const std::size_t len = p.states.size();

    if (node.kind == FormulaKind::Next) {
      std::size_t pos;
      if (len > 1) {
        pos = 1;
      } else if (p.cycle != SIZE_MAX) {
        pos = p.cycle;
      } else {
        return unknown(p.blocked);
      }
      Value v = eval(node.a, p.states[pos]);
      if (v.t != Tri::Unknown) add_reads(v.reason, p, 1);
      return v;
    }

    std::vector<Point> acc;
    for (std::size_t i = 0; i < len; ++i) {
      if (node.kind == FormulaKind::Globally) {
        Value v = eval(node.a, p.states[i]);
        if (v.t == Tri::Unknown) return v;
        if (v.t == Tri::False) {
          add_reads(v.reason, p, i);
          return v;
        }
        merge_into(acc, v.reason);
      } else {
        Value goal = eval(node.b, p.states[i]);
        if (goal.t == Tri::Unknown) return goal;
        if (goal.t == Tri::True) {
          merge_into(goal.reason, acc);
          add_reads(goal.reason, p, i);
          return goal;
        }
        merge_into(acc, goal.reason);
        Value hold = eval(node.a, p.states[i]);
        if (hold.t == Tri::Unknown) return hold;
        if (hold.t == Tri::False) {
          merge_into(hold.reason, acc);
          add_reads(hold.reason, p, i);
          return hold;
        }
        merge_into(acc, hold.reason);
      }
    }
    if (p.blocked != kNoPoint) return unknown(p.blocked);
    add_reads(acc, p, len);
    // G: every position holds. U: the goal never holds on prefix or cycle.
    return Value{node.kind == FormulaKind::Globally ? Tri::True : Tri::False, kNoPoint,
                 std::move(acc)};
  }

  Value quantify(const Node& node, StateId s) {
    const std::size_t d = push_frame(node.agent);
    Value r = search(d, node.a, s);
    if (d == 0 && capture_outermost && r.t == Tri::True) witness = snapshot(d);
    pop_frame();
    if (r.t != Tri::Unknown) {
      const Point cut = make_point(d, 0);
      r.reason.erase(std::lower_bound(r.reason.begin(), r.reason.end(), cut), r.reason.end());
    }
    return r;
  }

  /// Depth-first completion of frame d's table, branching only on points the
  /// body actually reads. A False branch whose reason ignores the branching
  /// point refutes all of its siblings at once.
  Value search(std::size_t d, int body, StateId s) {
    Value r = eval(body, s);
    if (r.t != Tri::Unknown || depth_of(r.need) != d) return r;

    const StateId q = state_of(r.need);
    const Point qp = r.need;
    frames_[d].assigned.push_back(q);
    const std::size_t options = is_.moves(q).size();
    std::optional<Value> pending;
    std::vector<Point> why;
    for (std::size_t m = 0; m < options; ++m) {
      frames_[d].table[q] = static_cast<std::int16_t>(m);
      tick_strategy();
      Value branch = search(d, body, s);
      if (branch.t == Tri::True) return branch;
      if (branch.t == Tri::Unknown) {
        if (!pending) pending = std::move(branch);
        continue;
      }
      if (!std::binary_search(branch.reason.begin(), branch.reason.end(), qp)) {
        frames_[d].table[q] = -1;
        return branch;
      }
      branch.reason.erase(std::lower_bound(branch.reason.begin(), branch.reason.end(), qp));
      merge_into(why, branch.reason);
    }
    frames_[d].table[q] = -1;
    if (pending) return *pending;
    return Value{Tri::False, kNoPoint, std::move(why)};
  }

  PositionalStrategy snapshot(std::size_t d) const {
    const Frame& f = frames_[d];
    PositionalStrategy out{f.agent, {}};
    for (StateId s : is_.decision_points(f.agent)) {
      const std::int16_t idx = f.table[s];
      out.table.emplace_back(s, is_.moves(s)[idx < 0 ? 0 : static_cast<std::size_t>(idx)].action);
    }
    return out;
  }

  const InterpretedSystem& is_;
  const Program& prog_;
  Budget budget_;
  Clock::time_point deadline_;
  std::vector<Frame> frames_;
  std::vector<std::vector<std::int16_t>> pool_;
  std::array<int, kAgentCount> binding_{};
  std::vector<int> binding_saved_;
  std::vector<std::uint32_t> mark_;
  std::vector<std::uint32_t> mark_pos_;
  std::uint32_t stamp_ = 0;
  std::vector<std::vector<std::int8_t>> memo_;
};

}  // namespace

Verdict check(const InterpretedSystem& is, const FormulaPtr& f, const Budget& budget) {
  const auto t0 = Clock::now();
  const FormulaPtr core = normalize(f);
  const Program prog(core, is.framework());
  Verdict v;
  v.reach_s = is.build_seconds();
  Engine engine(is, prog, budget);
  engine.capture_outermost = core->kind() == FormulaKind::Exists;
  try {
    const Value r = engine.eval(prog.root, is.initial());
    if (r.t == Tri::Unknown) throw std::logic_error("sentence evaluated to unknown");
    v.result = r.t == Tri::True ? CheckResult::True : CheckResult::False;
    if (v.result == CheckResult::True) v.witness = engine.witness;
  } catch (const BudgetExceeded& e) {
    v.result = e.kind;
  } catch (const ResourceError&) {
    v.result = CheckResult::ResourceExceeded;
  }
  v.strategies = engine.strategies;
  v.states_visited = engine.visited;
  v.mc_s = std::chrono::duration<double>(Clock::now() - t0).count();
  return v;
}

bool eval(const InterpretedSystem& is, const Assignment& chi, StateId s, const FormulaPtr& f) {
  if (s >= is.state_count()) throw std::out_of_range("state outside the system");
  const Program prog(normalize(f), is.framework());
  Engine engine(is, prog, Budget{});
  for (Agent a : {Agent::Pro, Agent::Opp, Agent::Env}) {
    if (const auto* strat = chi.strategy_for(a)) engine.preset(*strat);
  }
  const Value r = engine.eval(prog.root, s);
  if (r.t == Tri::Unknown) throw std::logic_error("assignment incomplete at a temporal operator");
  return r.t == Tri::True;
}

// ---------------------------------------------------------------- enumeration

StrategyEnumerator::StrategyEnumerator(const InterpretedSystem& is, Agent agent,
                                       std::uint64_t limit)
    : is_(is), agent_(agent), limit_(limit), digits_(is.decision_points(agent).size(), 0) {}

std::optional<PositionalStrategy> StrategyEnumerator::next() {
  if (done_) return std::nullopt;
  if (produced_ >= limit_) throw ResourceError("strategy enumeration exceeded its bound");
  const auto& points = is_.decision_points(agent_);
  PositionalStrategy out{agent_, {}};
  out.table.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    out.table.emplace_back(points[i], is_.moves(points[i])[digits_[i]].action);
  }
  ++produced_;
  std::size_t i = digits_.size();
  while (true) {
    if (i == 0) {
      done_ = true;
      break;
    }
    --i;
    if (++digits_[i] < is_.moves(points[i]).size()) break;
    digits_[i] = 0;
  }
  return out;
}

std::uint64_t strategy_count(const InterpretedSystem& is, Agent agent) {
  std::uint64_t total = 1;
  for (StateId s : is.decision_points(agent)) {
    const std::uint64_t k = is.moves(s).size();
    if (total > std::numeric_limits<std::uint64_t>::max() / k) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    total *= k;
  }
  return total;
}

// ---------------------------------------------------------------- fixpoint

namespace {

constexpr std::uint32_t kUnranked = ~std::uint32_t{0};

/// Rank of each state in the least fixpoint "Pro can force reaching
/// `target`": target states rank 0; a Pro mover joins one past its best
/// successor, every other state one past its worst. `choice` receives the
/// move index realizing a Pro mover's rank.
std::vector<std::uint32_t> attractor(const InterpretedSystem& is, const std::vector<bool>& target,
                                     const std::vector<bool>* allowed,
                                     const PositionalStrategy* fixed_pro,
                                     std::vector<int>* choice) {
  const std::size_t n = is.state_count();
  std::vector<std::uint32_t> rank(n, kUnranked);
  for (StateId s = 0; s < n; ++s) {
    if (target[s]) rank[s] = 0;
  }
  if (choice) choice->assign(n, -1);
  // Layered sweep; each layer only reads ranks from earlier layers.
  for (std::uint32_t layer = 1;; ++layer) {
    std::vector<std::pair<StateId, int>> joined;
    for (StateId s = 0; s < n; ++s) {
      if (rank[s] != kUnranked || (allowed && !(*allowed)[s])) continue;
      const auto who = is.mover(s);
      const auto moves = is.moves(s);
      if (who == Agent::Pro) {
        int best = -1;
        for (std::size_t m = 0; m < moves.size(); ++m) {
          if (fixed_pro && fixed_pro->action_at(s) != moves[m].action) continue;
          if (rank[moves[m].to] < layer && (best < 0 || rank[moves[m].to] < rank[moves[static_cast<std::size_t>(best)].to])) {
            best = static_cast<int>(m);
          }
        }
        if (best >= 0) joined.emplace_back(s, best);
      } else {
        const bool all = std::all_of(moves.begin(), moves.end(),
                                     [&](const auto& mv) { return rank[mv.to] < layer; });
        if (all) joined.emplace_back(s, -1);
      }
    }
    if (joined.empty()) break;
    for (const auto& [s, m] : joined) {
      rank[s] = layer;
      if (choice) (*choice)[s] = m;
    }
  }
  return rank;
}

}  // namespace

Verdict check_grounded_fixpoint(const InterpretedSystem& is) {
  const auto t0 = Clock::now();
  const std::size_t n = is.state_count();

  // Greatest fixpoint of G Pro_i for every i at once: a state stays while its
  // Pro atom holds and all successors carry the same atom.
  std::vector<bool> in(n, false);
  for (StateId s = 0; s < n; ++s) {
    const auto a = is.atom_at(s);
    in[s] = a && a->owner == Agent::Pro;
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (StateId s = 0; s < n; ++s) {
      if (!in[s]) continue;
      for (const auto& mv : is.moves(s)) {
        if (!in[mv.to] || is.atom_at(mv.to) != is.atom_at(s)) {
          in[s] = false;
          changed = true;
          break;
        }
      }
    }
  }
  for (StateId s = 0; s < n; ++s) {
    const auto a = is.atom_at(s);
    const bool terminal_pro = is.is_terminal(s) && a && a->owner == Agent::Pro;
    if (in[s] != terminal_pro) {
      throw std::logic_error("A G Pro_i states differ from the Pro-labelled terminal states");
    }
  }

  std::vector<int> choice;
  const auto rank = attractor(is, in, nullptr, nullptr, &choice);

  Verdict v;
  v.reach_s = is.build_seconds();
  v.states_visited = n;
  v.result = rank[is.initial()] != kUnranked ? CheckResult::True : CheckResult::False;
  if (v.result == CheckResult::True) {
    PositionalStrategy w{Agent::Pro, {}};
    for (StateId s : is.decision_points(Agent::Pro)) {
      const int m = choice[s] < 0 ? 0 : choice[s];
      w.table.emplace_back(s, is.moves(s)[static_cast<std::size_t>(m)].action);
    }
    v.witness = std::move(w);
  }
  v.mc_s = std::chrono::duration<double>(Clock::now() - t0).count();
  return v;
}

ProponentStrategy to_proponent_strategy(const InterpretedSystem& is,
                                        const PositionalStrategy& pro) {
  if (pro.agent != Agent::Pro) throw std::invalid_argument("expected a Pro strategy");
  const std::size_t n = is.state_count();

  // States reachable when Pro follows `pro` and Opp is unrestricted.
  std::vector<bool> reach(n, false);
  std::vector<StateId> stack{is.initial()};
  reach[is.initial()] = true;
  while (!stack.empty()) {
    const StateId s = stack.back();
    stack.pop_back();
    for (const auto& mv : is.moves(s)) {
      if (is.mover(s) == Agent::Pro && pro.action_at(s) != mv.action) continue;
      if (!reach[mv.to]) {
        reach[mv.to] = true;
        stack.push_back(mv.to);
      }
    }
  }

  std::vector<bool> terminal(n, false);
  for (StateId s = 0; s < n; ++s) terminal[s] = is.is_terminal(s);
  const auto rank = attractor(is, terminal, &reach, &pro, nullptr);

  const auto& af = is.framework();
  std::vector<std::pair<std::uint32_t, StateId>> best(af.size(), {kUnranked, kNoArg});
  std::vector<bool> seen(af.size(), false);
  for (StateId s : is.decision_points(Agent::Pro)) {
    if (!reach[s]) continue;
    const ArgId d = is.last(s);
    const std::pair<std::uint32_t, StateId> key{rank[s], s};
    if (!seen[d] || key < best[d]) {
      best[d] = key;
      seen[d] = true;
    }
  }
  ProponentStrategy sigma;
  for (ArgId d = 0; d < af.size(); ++d) {
    if (!seen[d]) continue;
    const ActionId a = pro.action_at(best[d].second);
    sigma.set(af, d, af.attack(a.attack).attacker);
  }
  return sigma;
}

PositionalStrategy positional_from(const InterpretedSystem& is, const ProponentStrategy& sigma) {
  const auto& af = is.framework();
  PositionalStrategy out{Agent::Pro, {}};
  for (StateId s : is.decision_points(Agent::Pro)) {
    ActionId a = is.moves(s)[0].action;
    if (const auto reply = sigma.reply(is.last(s))) {
      const AttackId att = af.attack_id(*reply, is.last(s));
      if (att != ArgumentationFramework::kNoAttack) a = ActionId::of(att);
    }
    out.table.emplace_back(s, a);
  }
  return out;
}

}  // namespace debate
