#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "debate/dispute.hpp"
#include "debate/formula.hpp"
#include "debate/interpreted_system.hpp"

namespace debate {

/// f_i restricted to the agent's decision points. Each decision point is one
/// reachable (local state, environment state) pair; since the pair fixes the
/// global state, entries are keyed by state id.
struct PositionalStrategy {
  Agent agent = Agent::Pro;
  std::vector<std::pair<StateId, ActionId>> table;  // ascending state id

  /// Chosen action; `nothing` away from decision points.
  ActionId action_at(StateId s) const;

  friend bool operator==(const PositionalStrategy&, const PositionalStrategy&) = default;
};

/// Throws std::invalid_argument unless every decision point of the agent is
/// covered by exactly one enabled action.
void validate_strategy(const InterpretedSystem& is, const PositionalStrategy& f);

/// `(local, env) -> action` lines in decision-point order.
std::string format_positional(const InterpretedSystem& is, const PositionalStrategy& f);

/// Per-agent bindings. Binding a variable of agent i replaces whatever
/// variable of agent i the play used before (the chi[x -> f] update).
class Assignment {
 public:
  void bind(const StrategyVariable& v, PositionalStrategy f);
  const PositionalStrategy* strategy_for(Agent a) const;
  const std::string* variable_for(Agent a) const;
  bool complete() const;

 private:
  std::array<std::optional<std::pair<std::string, PositionalStrategy>>, kAgentCount> slot_;
};

struct Lasso {
  std::vector<StateId> prefix;
  std::size_t cycle_start = 0;

  friend bool operator==(const Lasso&, const Lasso&) = default;
};

/// The unique run from s under a complete assignment, cut at the first
/// repeated state.
Lasso play(const InterpretedSystem& is, const Assignment& chi, StateId s);

enum class CheckResult { True, False, Timeout, ResourceExceeded };
std::string_view to_string(CheckResult r);

struct Budget {
  double wall_seconds = std::numeric_limits<double>::infinity();
  std::uint64_t max_strategies = std::numeric_limits<std::uint64_t>::max();
};

struct Verdict {
  CheckResult result = CheckResult::False;
  std::optional<PositionalStrategy> witness;
  double reach_s = 0.0;
  double mc_s = 0.0;
  std::uint64_t strategies = 0;
  std::uint64_t states_visited = 0;
};

/// Throws std::invalid_argument when an atom names an argument outside the
/// system's framework.
Verdict check(const InterpretedSystem& is, const FormulaPtr& f, const Budget& budget = {});

/// Throws std::logic_error if a temporal operator is reached with some agent
/// unbound.
bool eval(const InterpretedSystem& is, const Assignment& chi, StateId s, const FormulaPtr& f);

/// Odometer over an agent's strategies: decision points in state order, the
/// last one varying fastest, actions in canonical move order.
class StrategyEnumerator {
 public:
  StrategyEnumerator(const InterpretedSystem& is, Agent agent,
                     std::uint64_t limit = std::numeric_limits<std::uint64_t>::max());

  /// Next strategy, or nullopt when exhausted. Throws ResourceError once more
  /// than `limit` strategies have been produced.
  std::optional<PositionalStrategy> next();
  std::uint64_t produced() const noexcept { return produced_; }

 private:
  const InterpretedSystem& is_;
  Agent agent_;
  std::uint64_t limit_;
  std::uint64_t produced_ = 0;
  std::vector<std::size_t> digits_;
  bool done_ = false;
};

/// Number of strategies of `agent`, saturating at UINT64_MAX.
std::uint64_t strategy_count(const InterpretedSystem& is, Agent agent);

/// Attractor computation for the grounded shape. Target states are the
/// greatest fixpoints of G Pro_i; they are checked to be exactly the terminal
/// states labelled by a Pro atom.
Verdict check_grounded_fixpoint(const InterpretedSystem& is);

/// Projects a Pro strategy onto `last`: for every opponent argument d, the
/// reply chosen at the reachable decision point with last = d that is closest
/// to a terminal state (ties by state id).
ProponentStrategy to_proponent_strategy(const InterpretedSystem& is, const PositionalStrategy& pro);

/// Lifts an argument-level strategy to Pro's decision points: reply
/// sigma(last) where defined, else the first enabled action.
PositionalStrategy positional_from(const InterpretedSystem& is, const ProponentStrategy& sigma);

}  // namespace debate
