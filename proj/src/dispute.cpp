#include "debate/dispute.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace debate {

DisputeNode expand_dispute_tree(const ArgumentationFramework& af, ArgId root,
                                std::size_t max_depth) {
  if (root >= af.size()) throw std::out_of_range("root outside the framework");
  std::function<DisputeNode(ArgId, Player, std::size_t)> grow = [&](ArgId a, Player who,
                                                                    std::size_t depth) {
    DisputeNode node{a, who, depth, {}};
    if (depth < max_depth) {
      const Player next = who == Player::P ? Player::O : Player::P;
      for (ArgId b : af.attackers_by_name(a)) node.children.push_back(grow(b, next, depth + 1));
    }
    return node;
  };
  return grow(root, Player::P, 0);
}

bool has_open_branch(const ArgumentationFramework& af, const DisputeNode& tree,
                     std::size_t max_depth) {
  if (tree.children.empty()) {
    return tree.depth >= max_depth && !af.attackers_of(tree.argument).empty();
  }
  return std::any_of(tree.children.begin(), tree.children.end(),
                     [&](const DisputeNode& c) { return has_open_branch(af, c, max_depth); });
}

std::string format_outline(const ArgumentationFramework& af, const DisputeNode& tree) {
  std::string out;
  std::function<void(const DisputeNode&)> walk = [&](const DisputeNode& n) {
    out.append(2 * n.depth, ' ');
    out += n.label == Player::P ? "P: " : "O: ";
    out += af.name(n.argument);
    out += '\n';
    for (const auto& c : n.children) walk(c);
  };
  walk(tree);
  return out;
}

void ProponentStrategy::set(const ArgumentationFramework& af, ArgId opponent, ArgId reply) {
  if (opponent >= af.size() || reply >= af.size() || !af.attacks(reply, opponent)) {
    throw std::invalid_argument("strategy reply must attack the opponent argument");
  }
  choice_[opponent] = reply;
}

ProponentStrategy ProponentStrategy::from_names(
    const ArgumentationFramework& af, const std::vector<std::pair<std::string, std::string>>& m) {
  ProponentStrategy s;
  for (const auto& [opp, rep] : m) s.set(af, af.id(opp), af.id(rep));
  return s;
}

std::optional<ArgId> ProponentStrategy::reply(ArgId opponent) const {
  auto it = choice_.find(opponent);
  if (it == choice_.end()) return std::nullopt;
  return it->second;
}

std::string format_strategy(const ArgumentationFramework& af, const ProponentStrategy& sigma) {
  std::vector<std::pair<std::string, std::string>> rows;
  for (const auto& [o, p] : sigma.table()) rows.emplace_back(af.name(o), af.name(p));
  std::sort(rows.begin(), rows.end());
  std::string out;
  for (const auto& [o, p] : rows) out += o + " -> " + p + "\n";
  return out;
}

StrategySubtree apply_strategy(const ArgumentationFramework& af, ArgId root,
                               const ProponentStrategy& sigma) {
  if (root >= af.size()) throw std::out_of_range("root outside the framework");
  const std::size_t n = af.size();
  // Node k < n is P:k, node n + k is O:k.
  auto successors = [&](std::size_t node) {
    std::vector<std::size_t> out;
    if (node < n) {
      for (ArgId y : af.attackers_of(static_cast<ArgId>(node))) out.push_back(n + y);
    } else if (auto r = sigma.reply(static_cast<ArgId>(node - n))) {
      out.push_back(*r);
    }
    return out;
  };

  enum Color : unsigned char { White, Grey, Black };
  std::vector<Color> color(2 * n, White);
  StrategySubtree out;
  out.root = root;
  std::vector<ArgId> pro, opp, undefended;

  // Iterative DFS; a grey successor closes a cycle on the current branch.
  std::vector<std::pair<std::size_t, std::size_t>> stack;  // node, next successor index
  std::vector<std::vector<std::size_t>> succ_cache(2 * n);
  auto enter = [&](std::size_t node) {
    color[node] = Grey;
    succ_cache[node] = successors(node);
    if (node < n) {
      pro.push_back(static_cast<ArgId>(node));
    } else {
      opp.push_back(static_cast<ArgId>(node - n));
      if (succ_cache[node].empty()) undefended.push_back(static_cast<ArgId>(node - n));
    }
    stack.emplace_back(node, 0);
  };
  enter(root);
  while (!stack.empty()) {
    const std::size_t node = stack.back().first;
    const std::size_t next = stack.back().second;
    if (next < succ_cache[node].size()) {
      ++stack.back().second;
      const std::size_t s = succ_cache[node][next];
      if (color[s] == Grey) {
        out.has_infinite_branch = true;
      } else if (color[s] == White) {
        enter(s);
      }
    } else {
      color[node] = Black;
      stack.pop_back();
    }
  }
  out.pro_args = Extension(std::move(pro));
  out.opp_args = Extension(std::move(opp));
  out.undefended_opp = Extension(std::move(undefended));
  return out;
}

namespace {

bool disjoint(const Extension& a, const Extension& b) {
  return std::none_of(a.begin(), a.end(), [&](ArgId x) { return b.contains(x); });
}

class WinningSearch {
 public:
  WinningSearch(const ArgumentationFramework& af, WinningKind kind, std::size_t budget)
      : af_(af), kind_(kind), budget_(budget) {}

  std::optional<ProponentStrategy> run(ArgId root) {
    ProponentStrategy sigma;
    if (search(root, sigma)) return sigma;
    return std::nullopt;
  }

  bool credulous(ArgId b) {
    auto it = credulous_.find(b);
    if (it != credulous_.end()) return it->second;
    WinningSearch sub(af_, WinningKind::Admissible, budget_);
    const bool ok = sub.run(b).has_value();
    visited_ += sub.visited_;
    credulous_[b] = ok;
    return ok;
  }

 private:
  bool search(ArgId root, ProponentStrategy& sigma) {
    if (++visited_ > budget_) {
      throw ResourceError("winning-strategy search exceeded its budget");
    }
    const StrategySubtree t = apply_strategy(af_, root, sigma);
    // Every pruning test is monotone under adding replies.
    if (kind_ == WinningKind::Grounded && t.has_infinite_branch) return false;
    if (kind_ != WinningKind::Grounded && !disjoint(t.pro_args, t.opp_args)) return false;
    std::vector<ArgId> open;
    for (ArgId y : t.undefended_opp) {
      if (af_.attackers_of(y).empty()) return false;
      open.push_back(y);
    }
    if (kind_ == WinningKind::Ideal) {
      for (ArgId b : t.opp_args) {
        if (credulous(b)) return false;
      }
    }
    if (open.empty()) return true;
    const ArgId y = *std::min_element(open.begin(), open.end(), [&](ArgId a, ArgId b) {
      return af_.name(a) < af_.name(b);
    });
    for (ArgId z : af_.attackers_by_name(y)) {
      sigma.set(af_, y, z);
      if (search(root, sigma)) return true;
      sigma.erase(y);
    }
    return false;
  }

  const ArgumentationFramework& af_;
  WinningKind kind_;
  std::size_t budget_;
  std::size_t visited_ = 0;
  std::map<ArgId, bool> credulous_;
};

}  // namespace

bool is_winning(const ArgumentationFramework& af, ArgId root, const ProponentStrategy& sigma,
                WinningKind kind) {
  const StrategySubtree t = apply_strategy(af, root, sigma);
  if (!t.undefended_opp.empty()) return false;
  switch (kind) {
    case WinningKind::Grounded:
      return !t.has_infinite_branch;
    case WinningKind::Admissible:
      return disjoint(t.pro_args, t.opp_args);
    case WinningKind::Ideal: {
      if (!disjoint(t.pro_args, t.opp_args)) return false;
      WinningSearch probe(af, WinningKind::Admissible, 1'000'000);
      return std::none_of(t.opp_args.begin(), t.opp_args.end(),
                          [&](ArgId b) { return probe.credulous(b); });
    }
  }
  return false;
}

std::optional<ProponentStrategy> exists_winning(const ArgumentationFramework& af, ArgId root,
                                                WinningKind kind, std::size_t budget) {
  if (root >= af.size()) throw std::out_of_range("root outside the framework");
  return WinningSearch(af, kind, budget).run(root);
}

}  // namespace debate
