#include "debate/interpreted_system.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <stdexcept>

namespace debate {

std::string_view to_string(Agent a) {
  switch (a) {
    case Agent::Pro: return "Pro";
    case Agent::Opp: return "Opp";
    case Agent::Env: return "Env";
  }
  return "?";
}

bool AttackSet::is_subset_of(const AttackSet& other) const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    const std::uint64_t o = i < other.words_.size() ? other.words_[i] : 0;
    if (words_[i] & ~o) return false;
  }
  return true;
}

std::size_t AttackSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h * 0xff51afd7ed558ccdULL;
}

}  // namespace

std::uint64_t InterpretedSystem::hash_of(const Core& c, std::span<const std::uint64_t> seen) const {
  std::uint64_t h = mix(0, (std::uint64_t{c.pro} << 32) | c.opp);
  h = mix(h, (std::uint64_t{c.last} << 1) | static_cast<std::uint64_t>(c.turn));
  for (auto w : seen) h = mix(h, w);
  return h ^ (h >> 29);
}

std::size_t InterpretedSystem::probe(const Core& c, std::span<const std::uint64_t> seen) const {
  const std::size_t mask = slots_.size() - 1;
  std::size_t i = hash_of(c, seen) & mask;
  while (true) {
    const StateId id = slots_[i];
    if (id == kEmptySlot) return i;
    const Core& o = core_[id];
    if (o.pro == c.pro && o.opp == c.opp && o.turn == c.turn && o.last == c.last &&
        std::equal(seen.begin(), seen.end(), seen_words(id).begin())) {
      return i;
    }
    i = (i + 1) & mask;
  }
}

void InterpretedSystem::rehash(std::size_t capacity) {
  slots_.assign(capacity, kEmptySlot);
  for (StateId s = 0; s < core_.size(); ++s) slots_[probe(core_[s], seen_words(s))] = s;
}

GlobalState InterpretedSystem::state(StateId s) const {
  AttackSet seen(af_.attack_count());
  if (words_ > 0) {
    auto w = seen_words(s);
    for (std::size_t i = 0; i < words_; ++i) {
      for (std::uint64_t r = w[i]; r; r &= r - 1) {
        seen.insert(static_cast<AttackId>(i * 64 + std::countr_zero(r)));
      }
    }
  }
  const Core& c = core_.at(s);
  return GlobalState{c.pro, c.opp, EnvState{c.turn, c.last, std::move(seen)}};
}

std::optional<Agent> InterpretedSystem::mover(StateId s) const {
  if (terminal_[s]) return std::nullopt;
  return core_[s].turn == Turn::Pro ? Agent::Pro : Agent::Opp;
}

std::vector<ActionId> InterpretedSystem::enabled_actions(StateId s, Agent agent) const {
  if (mover(s) != agent) return {ActionId::nothing()};
  std::vector<ActionId> out;
  for (const Move& m : moves(s)) out.push_back(m.action);
  return out;
}

std::optional<StateId> InterpretedSystem::successor(StateId s, const JointAction& a) const {
  const auto who = mover(s);
  for (Agent other : {Agent::Pro, Agent::Opp, Agent::Env}) {
    if (other != who && !a.of(other).is_nothing()) return std::nullopt;
  }
  const ActionId chosen = who ? a.of(*who) : ActionId::nothing();
  for (const Move& m : moves(s)) {
    if (m.action == chosen) return m.to;
  }
  return std::nullopt;
}

bool InterpretedSystem::atom_holds(StateId s, Atom atom) const {
  const auto held = atom_at(s);
  return held && *held == atom;
}

std::optional<Atom> InterpretedSystem::atom_at(StateId s) const {
  const Core& c = core_[s];
  if (c.turn == Turn::Opp && c.pro == c.last) return Atom{Agent::Pro, c.last};
  if (c.turn == Turn::Pro && c.opp == c.last) return Atom{Agent::Opp, c.last};
  return std::nullopt;
}

std::optional<StateId> InterpretedSystem::find(const GlobalState& g) const {
  Core c{g.pro, g.opp, g.env.turn, g.env.last};
  std::vector<std::uint64_t> seen(words_, 0);
  const auto& w = g.env.attacks_seen.words();
  if (space_ == StateSpace::Collapsed) {
    if (g.env.attacks_seen.count() != 0) return std::nullopt;
  } else {
    if (w.size() > words_ && std::any_of(w.begin() + words_, w.end(), [](auto x) { return x; })) {
      return std::nullopt;
    }
    std::copy_n(w.begin(), std::min(w.size(), words_), seen.begin());
  }
  const StateId id = slots_[probe(c, seen)];
  if (id == kEmptySlot) return std::nullopt;
  return id;
}

InterpretedSystem build_interpreted_system(const ArgumentationFramework& af, ArgId root,
                                           const BuildOptions& options) {
  if (root >= af.size()) throw std::out_of_range("root outside the framework");
  const auto t0 = std::chrono::steady_clock::now();

  InterpretedSystem is;
  is.af_ = af;
  is.root_ = root;
  is.space_ = options.space;
  is.words_ = options.space == StateSpace::Full ? (af.attack_count() + 63) / 64 : 0;
  const std::size_t words = is.words_;

  // Attackers of each argument in canonical (name) order, with attack ids.
  std::vector<std::vector<std::pair<ArgId, AttackId>>> by_name(af.size());
  for (ArgId y = 0; y < af.size(); ++y) {
    for (ArgId x : af.attackers_by_name(y)) by_name[y].emplace_back(x, af.attack_id(x, y));
  }

  using Core = InterpretedSystem::Core;
  std::vector<std::uint64_t> scratch(words, 0);
  auto intern = [&](const Core& c, const std::vector<std::uint64_t>& seen) -> StateId {
    if ((is.core_.size() + 1) * 2 > is.slots_.size()) is.rehash(std::max<std::size_t>(64, is.slots_.size() * 2));
    const std::size_t slot = is.probe(c, seen);
    if (is.slots_[slot] != InterpretedSystem::kEmptySlot) return is.slots_[slot];
    if (is.core_.size() >= options.max_states) {
      throw ResourceError("interpreted system exceeds " + std::to_string(options.max_states) +
                          " reachable states");
    }
    const auto id = static_cast<StateId>(is.core_.size());
    is.core_.push_back(c);
    is.seen_pool_.insert(is.seen_pool_.end(), seen.begin(), seen.end());
    is.slots_[slot] = id;
    return id;
  };

  intern(Core{root, kNoArg, Turn::Opp, root}, scratch);
  is.move_begin_.push_back(0);
  // States are expanded in discovery order, so ids are BFS order.
  for (StateId s = 0; s < is.core_.size(); ++s) {
    const Core c = is.core_[s];
    const auto& options_here = by_name[c.last];
    if (options_here.empty()) {
      is.terminal_.push_back(true);
      is.moves_.push_back({ActionId::nothing(), s});
    } else {
      is.terminal_.push_back(false);
      for (const auto& [x, att] : options_here) {
        std::copy_n(is.seen_pool_.begin() + static_cast<std::ptrdiff_t>(s * words), words,
                    scratch.begin());
        if (words) scratch[att / 64] |= std::uint64_t{1} << (att % 64);
        const Core next = c.turn == Turn::Pro ? Core{x, c.opp, Turn::Opp, x}
                                              : Core{c.pro, x, Turn::Pro, x};
        const StateId to = intern(next, scratch);
        is.moves_.push_back({ActionId::of(att), to});
      }
      const Agent who = c.turn == Turn::Pro ? Agent::Pro : Agent::Opp;
      is.decision_points_[static_cast<std::size_t>(who)].push_back(s);
    }
    is.move_begin_.push_back(static_cast<std::uint32_t>(is.moves_.size()));
  }

  is.build_seconds_ =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return is;
}

std::string format_action(const ArgumentationFramework& af, ActionId a) {
  if (a.is_nothing()) return "nothing";
  const Attack& at = af.attack(a.attack);
  return "attack(" + af.name(at.attacker) + "," + af.name(at.target) + ")";
}

std::string format_atom(const ArgumentationFramework& af, Atom a) {
  return std::string(a.owner == Agent::Pro ? "Pro_" : "Opp_") + af.name(a.arg);
}

std::string format_state(const InterpretedSystem& is, StateId s) {
  const auto& af = is.framework();
  const GlobalState g = is.state(s);
  std::string out = "pro=" + af.name(g.pro);
  out += " opp=" + (g.opp == kNoArg ? std::string("empty") : af.name(g.opp));
  out += " env=(";
  out += g.env.turn == Turn::Pro ? "Pro" : "Opp";
  out += ", " + af.name(g.env.last);
  if (is.space() == StateSpace::Full) {
    std::vector<std::string> pairs;
    for (AttackId k = 0; k < af.attack_count(); ++k) {
      if (g.env.attacks_seen.contains(k)) {
        const Attack& at = af.attack(k);
        pairs.push_back("(" + af.name(at.attacker) + "," + af.name(at.target) + ")");
      }
    }
    std::sort(pairs.begin(), pairs.end());
    out += ", {";
    for (std::size_t i = 0; i < pairs.size(); ++i) out += (i ? ", " : "") + pairs[i];
    out += "}";
  }
  out += ")";
  return out;
}

std::string format_listing(const InterpretedSystem& is) {
  const auto& af = is.framework();
  std::string out = "states " + std::to_string(is.state_count()) + "\n";
  for (StateId s = 0; s < is.state_count(); ++s) {
    out += "s" + std::to_string(s) + " " + format_state(is, s) + "\n";
  }
  out += "transitions\n";
  for (StateId s = 0; s < is.state_count(); ++s) {
    const auto who = is.mover(s);
    for (const auto& m : is.moves(s)) {
      JointAction j;
      if (who == Agent::Pro) j.pro = m.action;
      if (who == Agent::Opp) j.opp = m.action;
      out += "s" + std::to_string(s) + " (" + format_action(af, j.pro) + ", " +
             format_action(af, j.opp) + ", " + format_action(af, j.env) + ") s" +
             std::to_string(m.to) + "\n";
    }
  }
  out += "atoms\n";
  for (StateId s = 0; s < is.state_count(); ++s) {
    if (auto a = is.atom_at(s)) out += "s" + std::to_string(s) + " " + format_atom(af, *a) + "\n";
  }
  return out;
}

}  // namespace debate
