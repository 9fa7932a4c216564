#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "debate/framework.hpp"

namespace debate {

enum class Player { P, O };

struct DisputeNode {
  ArgId argument;
  Player label;
  std::size_t depth;
  std::vector<DisputeNode> children;
};

/// Dispute tree rooted at `root`, cut at `max_depth` edges. Children are
/// ordered by argument name.
DisputeNode expand_dispute_tree(const ArgumentationFramework& af, ArgId root,
                                std::size_t max_depth);

/// True if some branch of the truncated tree reaches `max_depth` while its
/// last argument is still attacked.
bool has_open_branch(const ArgumentationFramework& af, const DisputeNode& tree,
                     std::size_t max_depth);

/// Indented `P: x` / `O: y` outline, two spaces per level.
std::string format_outline(const ArgumentationFramework& af, const DisputeNode& tree);

/// Proponent reply table: opponent argument -> chosen attacker.
class ProponentStrategy {
 public:
  ProponentStrategy() = default;

  /// Throws std::invalid_argument unless (reply, opponent) is an attack.
  void set(const ArgumentationFramework& af, ArgId opponent, ArgId reply);
  static ProponentStrategy from_names(const ArgumentationFramework& af,
                                      const std::vector<std::pair<std::string, std::string>>& m);

  std::optional<ArgId> reply(ArgId opponent) const;
  void erase(ArgId opponent) { choice_.erase(opponent); }
  const std::map<ArgId, ArgId>& table() const noexcept { return choice_; }
  bool empty() const noexcept { return choice_.empty(); }

  friend bool operator==(const ProponentStrategy&, const ProponentStrategy&) = default;

 private:
  std::map<ArgId, ArgId> choice_;
};

/// `x -> y` lines sorted by opponent argument name.
std::string format_strategy(const ArgumentationFramework& af, const ProponentStrategy& sigma);

/// Finite summary of the (possibly infinite) subtree T_sigma.
struct StrategySubtree {
  ArgId root = kNoArg;
  Extension pro_args;
  Extension opp_args;
  Extension undefended_opp;
  bool has_infinite_branch = false;
};

StrategySubtree apply_strategy(const ArgumentationFramework& af, ArgId root,
                               const ProponentStrategy& sigma);

enum class WinningKind { Grounded, Admissible, Ideal };

bool is_winning(const ArgumentationFramework& af, ArgId root, const ProponentStrategy& sigma,
                WinningKind kind);

/// Depth-first search over reply tables restricted to reachable opponent
/// arguments. The least witness is returned: the smallest-named open opponent
/// argument is branched first, replies tried by attacker name. Throws
/// ResourceError when more than `budget` partial tables are visited.
std::optional<ProponentStrategy> exists_winning(const ArgumentationFramework& af, ArgId root,
                                                WinningKind kind,
                                                std::size_t budget = 1'000'000);

}  // namespace debate
