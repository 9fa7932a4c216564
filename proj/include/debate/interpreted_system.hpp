#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "debate/framework.hpp"

namespace debate {

enum class Agent : std::uint8_t { Pro = 0, Opp = 1, Env = 2 };
inline constexpr std::size_t kAgentCount = 3;
std::string_view to_string(Agent a);

enum class Turn : std::uint8_t { Pro, Opp };

using StateId = std::uint32_t;

/// Attack subset over the framework's attack ids.
class AttackSet {
 public:
  AttackSet() = default;
  explicit AttackSet(std::size_t attack_count) : words_((attack_count + 63) / 64, 0) {}

  void insert(AttackId a) { words_[a / 64] |= std::uint64_t{1} << (a % 64); }
  bool contains(AttackId a) const {
    return a / 64 < words_.size() && (words_[a / 64] >> (a % 64)) & 1U;
  }
  bool is_subset_of(const AttackSet& other) const;
  std::size_t count() const;
  const std::vector<std::uint64_t>& words() const noexcept { return words_; }

  friend bool operator==(const AttackSet&, const AttackSet&) = default;

 private:
  std::vector<std::uint64_t> words_;
};

struct EnvState {
  Turn turn;
  ArgId last;
  AttackSet attacks_seen;

  friend bool operator==(const EnvState&, const EnvState&) = default;
};

/// `opp == kNoArg` is the distinguished `empty` local state of the opponent.
struct GlobalState {
  ArgId pro;
  ArgId opp;
  EnvState env;

  friend bool operator==(const GlobalState&, const GlobalState&) = default;
};

/// attack(x, y) for an attack id, or `nothing`.
struct ActionId {
  static constexpr AttackId kNothing = ArgumentationFramework::kNoAttack;
  AttackId attack = kNothing;

  bool is_nothing() const noexcept { return attack == kNothing; }
  static ActionId nothing() { return {}; }
  static ActionId of(AttackId a) { return {a}; }

  friend bool operator==(const ActionId&, const ActionId&) = default;
};

struct JointAction {
  ActionId pro;
  ActionId opp;
  ActionId env;

  const ActionId& of(Agent a) const { return a == Agent::Pro ? pro : a == Agent::Opp ? opp : env; }
  friend bool operator==(const JointAction&, const JointAction&) = default;
};

struct Atom {
  Agent owner;  // Pro or Opp
  ArgId arg;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/// Full keeps attacksSeen exactly as reached. Collapsed drops it: the
/// environment component then never records attacks, which yields a
/// bisimilar system (protocols, transitions of the other components and the
/// valuation never read attacksSeen) with far fewer states.
enum class StateSpace { Full, Collapsed };

struct BuildOptions {
  StateSpace space = StateSpace::Full;
  std::size_t max_states = 4'000'000;
};

class InterpretedSystem {
 public:
  struct Move {
    ActionId action;  // the mover's action; everyone else plays nothing
    StateId to;
  };

  const ArgumentationFramework& framework() const noexcept { return af_; }
  ArgId root() const noexcept { return root_; }
  StateSpace space() const noexcept { return space_; }
  StateId initial() const noexcept { return 0; }
  std::size_t state_count() const noexcept { return core_.size(); }
  double build_seconds() const noexcept { return build_seconds_; }

  GlobalState state(StateId s) const;
  Turn turn(StateId s) const { return core_[s].turn; }
  ArgId last(StateId s) const { return core_[s].last; }
  ArgId pro_local(StateId s) const { return core_[s].pro; }
  ArgId opp_local(StateId s) const { return core_[s].opp; }

  /// Agent with a non-nothing enabled action, if any.
  std::optional<Agent> mover(StateId s) const;
  bool is_terminal(StateId s) const { return terminal_[s]; }

  /// Enabled moves of the mover in canonical order (attacker name), or the
  /// single all-nothing self-loop at terminal states.
  std::span<const Move> moves(StateId s) const {
    return {moves_.data() + move_begin_[s], moves_.data() + move_begin_[s + 1]};
  }

  /// Protocol output; never empty.
  std::vector<ActionId> enabled_actions(StateId s, Agent agent) const;

  /// Defined only for protocol-consistent joint actions.
  std::optional<StateId> successor(StateId s, const JointAction& a) const;

  bool atom_holds(StateId s, Atom atom) const;
  /// The atom that holds at s, if any (at most one does).
  std::optional<Atom> atom_at(StateId s) const;

  /// Global state lookup; nullopt if unreachable.
  std::optional<StateId> find(const GlobalState& g) const;

  /// Decision points of `agent` (states where it has at least one attack),
  /// ascending state order.
  const std::vector<StateId>& decision_points(Agent agent) const {
    return decision_points_[static_cast<std::size_t>(agent)];
  }

  friend InterpretedSystem build_interpreted_system(const ArgumentationFramework&, ArgId,
                                                    const BuildOptions&);

 private:
  struct Core {
    ArgId pro;
    ArgId opp;
    Turn turn;
    ArgId last;
  };

  static constexpr StateId kEmptySlot = ~StateId{0};

  std::span<const std::uint64_t> seen_words(StateId s) const {
    return {seen_pool_.data() + s * words_, words_};
  }
  std::uint64_t hash_of(const Core& c, std::span<const std::uint64_t> seen) const;
  /// Slot holding an equal state, or the empty slot where it would go.
  std::size_t probe(const Core& c, std::span<const std::uint64_t> seen) const;
  void rehash(std::size_t capacity);

  ArgumentationFramework af_;
  ArgId root_ = kNoArg;
  StateSpace space_ = StateSpace::Full;
  std::size_t words_ = 0;
  std::vector<Core> core_;
  std::vector<std::uint64_t> seen_pool_;  // words_ per state
  std::vector<std::uint32_t> move_begin_;  // CSR offsets, size state_count() + 1
  std::vector<Move> moves_;
  std::vector<bool> terminal_;
  std::vector<StateId> slots_;  // open addressing over state ids
  std::vector<StateId> decision_points_[kAgentCount];
  double build_seconds_ = 0.0;
};

/// Frontier search from (root, empty, (Opp, root, {})). Throws
/// ResourceError when more than `options.max_states` states are reachable.
InterpretedSystem build_interpreted_system(const ArgumentationFramework& af, ArgId root,
                                           const BuildOptions& options = {});

std::string format_action(const ArgumentationFramework& af, ActionId a);
std::string format_state(const InterpretedSystem& is, StateId s);
std::string format_atom(const ArgumentationFramework& af, Atom a);

/// Deterministic listing: states, transitions, atoms.
std::string format_listing(const InterpretedSystem& is);

}  // namespace debate
