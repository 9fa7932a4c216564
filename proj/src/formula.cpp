#include "debate/formula.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <optional>

namespace debate {

FormulaPtr Formula::make_true() {
  static const FormulaPtr t = std::make_shared<Formula>();
  return t;
}

FormulaPtr Formula::atom(Agent owner, std::string arg) {
  if (owner == Agent::Env) throw std::invalid_argument("atoms belong to Pro or Opp");
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Atom;
  node->owner_ = owner;
  node->arg_ = std::move(arg);
  return node;
}

FormulaPtr Formula::negation(FormulaPtr f) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Not;
  node->lhs_ = std::move(f);
  return node;
}

FormulaPtr Formula::disjunction(FormulaPtr a, FormulaPtr b) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Or;
  node->lhs_ = std::move(a);
  node->rhs_ = std::move(b);
  return node;
}

FormulaPtr Formula::conjunction(FormulaPtr a, FormulaPtr b) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::And;
  node->lhs_ = std::move(a);
  node->rhs_ = std::move(b);
  return node;
}

FormulaPtr Formula::implication(FormulaPtr a, FormulaPtr b) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Implies;
  node->lhs_ = std::move(a);
  node->rhs_ = std::move(b);
  return node;
}

FormulaPtr Formula::next(FormulaPtr f) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Next;
  node->lhs_ = std::move(f);
  return node;
}

FormulaPtr Formula::globally(FormulaPtr f) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Globally;
  node->lhs_ = std::move(f);
  return node;
}

FormulaPtr Formula::until(FormulaPtr a, FormulaPtr b) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Until;
  node->lhs_ = std::move(a);
  node->rhs_ = std::move(b);
  return node;
}

FormulaPtr Formula::eventually(FormulaPtr f) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Eventually;
  node->lhs_ = std::move(f);
  return node;
}

FormulaPtr Formula::exists(StrategyVariable v, FormulaPtr f) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::Exists;
  node->var_ = std::move(v);
  node->lhs_ = std::move(f);
  return node;
}

FormulaPtr Formula::forall(StrategyVariable v, FormulaPtr f) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::ForAll;
  node->var_ = std::move(v);
  node->lhs_ = std::move(f);
  return node;
}

FormulaPtr Formula::coalition_path(AgentSet coalition, FormulaPtr path) {
  auto node = std::make_shared<Formula>();
  node->kind_ = FormulaKind::CoalitionPath;
  node->coalition_ = AgentSet(coalition & kAllAgents);
  node->lhs_ = std::move(path);
  return node;
}

bool structurally_equal(const Formula& a, const Formula& b) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case FormulaKind::True:
      return true;
    case FormulaKind::Atom:
      return a.atom_owner() == b.atom_owner() && a.atom_arg() == b.atom_arg();
    case FormulaKind::Or:
    case FormulaKind::And:
    case FormulaKind::Implies:
    case FormulaKind::Until:
      return structurally_equal(*a.lhs(), *b.lhs()) && structurally_equal(*a.rhs(), *b.rhs());
    case FormulaKind::Exists:
    case FormulaKind::ForAll:
      if (!(a.variable() == b.variable())) return false;
      break;
    case FormulaKind::CoalitionPath:
      if (a.coalition() != b.coalition()) return false;
      break;
    default:
      break;
  }
  return structurally_equal(*a.body(), *b.body());
}

StrategyVariable default_variable(Agent a) {
  switch (a) {
    case Agent::Pro: return {"p", a};
    case Agent::Opp: return {"o", a};
    case Agent::Env: return {"e", a};
  }
  return {"p", Agent::Pro};
}

// ---------------------------------------------------------------- parsing

namespace {

std::optional<Agent> implied_agent(std::string_view name) {
  if (name.empty()) return std::nullopt;
  switch (name[0]) {
    case 'p': return Agent::Pro;
    case 'o': return Agent::Opp;
    case 'e': return Agent::Env;
    default: return std::nullopt;
  }
}

std::optional<Agent> agent_named(std::string_view s) {
  if (s == "Pro") return Agent::Pro;
  if (s == "Opp") return Agent::Opp;
  if (s == "Env") return Agent::Env;
  return std::nullopt;
}

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class FormulaParser {
 public:
  FormulaParser(std::string_view text, const ArgumentationFramework* af) : text_(text), af_(af) {}

  FormulaPtr parse() {
    FormulaPtr f = implication();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw FormulaSyntaxError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!eat(tok)) fail("expected '" + std::string(tok) + "'");
  }

  /// Identifier at the cursor, without consuming it.
  std::string_view peek_ident() {
    skip_ws();
    std::size_t end = pos_;
    while (end < text_.size() && ident_char(text_[end])) ++end;
    return text_.substr(pos_, end - pos_);
  }

  FormulaPtr implication() {
    FormulaPtr lhs = disjunction();
    if (eat("=>")) return Formula::implication(lhs, implication());
    return lhs;
  }

  FormulaPtr disjunction() {
    FormulaPtr f = conjunction();
    while (eat("|")) f = Formula::disjunction(f, conjunction());
    return f;
  }

  FormulaPtr conjunction() {
    FormulaPtr f = until();
    while (eat("&")) f = Formula::conjunction(f, until());
    return f;
  }

  FormulaPtr until() {
    FormulaPtr lhs = prefix();
    if (peek_ident() == "U") {
      pos_ += 1;
      return Formula::until(lhs, until());
    }
    return lhs;
  }

  StrategyVariable variable() {
    const std::string_view name = peek_ident();
    if (name.empty()) fail("expected a strategy variable");
    pos_ += name.size();
    std::optional<Agent> agent;
    if (eat(":")) {
      const std::string_view a = peek_ident();
      agent = agent_named(a);
      if (!agent) fail("expected Pro, Opp or Env");
      pos_ += a.size();
    } else {
      agent = implied_agent(name);
      if (!agent) fail("variable '" + std::string(name) + "' needs an agent type");
    }
    expect(">");
    return {std::string(name), *agent};
  }

  AgentSet coalition() {
    AgentSet set = 0;
    if (eat(">>")) return set;
    while (true) {
      const std::string_view a = peek_ident();
      const auto agent = agent_named(a);
      if (!agent) fail("expected Pro, Opp or Env");
      pos_ += a.size();
      set |= agent_bit(*agent);
      if (eat(">>")) return set;
      expect(",");
    }
  }

  FormulaPtr atom(Agent owner, std::string_view ident) {
    const std::string name(ident.substr(4));
    if (!is_valid_argument_name(name)) fail("atom needs an argument name");
    if (af_ && !af_->contains(name)) fail("unknown argument '" + name + "'");
    pos_ += ident.size();
    return Formula::atom(owner, name);
  }

  FormulaPtr prefix() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of formula");
    if (eat("!")) return Formula::negation(prefix());
    if (eat("(")) {
      FormulaPtr f = implication();
      expect(")");
      return f;
    }
    if (eat("<<")) {
      const AgentSet c = coalition();
      return Formula::coalition_path(c, prefix());
    }
    const std::string_view id = peek_ident();
    if (id.empty()) fail("unexpected character");
    const bool quant = (id == "A" || id == "E") && pos_ + 1 < text_.size() &&
                       text_[pos_ + 1] == '<' &&
                       (pos_ + 2 >= text_.size() || text_[pos_ + 2] != '<');
    if (quant) {
      pos_ += 2;
      StrategyVariable v = variable();
      FormulaPtr body = prefix();
      return id == "E" ? Formula::exists(std::move(v), body) : Formula::forall(std::move(v), body);
    }
    if (id == "X" || id == "G" || id == "F" || id == "A" || id == "E") {
      pos_ += 1;
      FormulaPtr body = prefix();
      if (id == "X") return Formula::next(body);
      if (id == "G") return Formula::globally(body);
      if (id == "F") return Formula::eventually(body);
      return Formula::coalition_path(id == "A" ? AgentSet{0} : kAllAgents, body);
    }
    if (id == "true") {
      pos_ += id.size();
      return Formula::make_true();
    }
    if (id.starts_with("Pro_")) return atom(Agent::Pro, id);
    if (id.starts_with("Opp_")) return atom(Agent::Opp, id);
    fail("unknown token '" + std::string(id) + "'");
  }

  std::string_view text_;
  const ArgumentationFramework* af_;
  std::size_t pos_ = 0;
};

}  // namespace

FormulaPtr parse_formula(std::string_view text) { return FormulaParser(text, nullptr).parse(); }

FormulaPtr parse_formula(std::string_view text, const ArgumentationFramework& af) {
  return FormulaParser(text, &af).parse();
}

// ---------------------------------------------------------------- printing

namespace {

void print_into(const Formula& f, std::string& out) {
  auto binary = [&](const char* op) {
    out += '(';
    print_into(*f.lhs(), out);
    out += op;
    print_into(*f.rhs(), out);
    out += ')';
  };
  auto unary = [&](const char* op) {
    out += op;
    print_into(*f.body(), out);
  };
  switch (f.kind()) {
    case FormulaKind::True: out += "true"; break;
    case FormulaKind::Atom:
      out += f.atom_owner() == Agent::Pro ? "Pro_" : "Opp_";
      out += f.atom_arg();
      break;
    case FormulaKind::Not: unary("!"); break;
    case FormulaKind::Or: binary(" | "); break;
    case FormulaKind::And: binary(" & "); break;
    case FormulaKind::Implies: binary(" => "); break;
    case FormulaKind::Until: binary(" U "); break;
    case FormulaKind::Next: unary("X "); break;
    case FormulaKind::Globally: unary("G "); break;
    case FormulaKind::Eventually: unary("F "); break;
    case FormulaKind::Exists:
    case FormulaKind::ForAll: {
      const auto& v = f.variable();
      out += f.kind() == FormulaKind::Exists ? "E<" : "A<";
      out += v.name;
      if (implied_agent(v.name) != v.agent) {
        out += ':';
        out += to_string(v.agent);
      }
      out += "> ";
      print_into(*f.body(), out);
      break;
    }
    case FormulaKind::CoalitionPath: {
      if (f.coalition() == 0) {
        out += "A ";
      } else if (f.coalition() == kAllAgents) {
        out += "E ";
      } else {
        out += "<<";
        bool first = true;
        for (Agent a : {Agent::Pro, Agent::Opp, Agent::Env}) {
          if (f.coalition() & agent_bit(a)) {
            if (!first) out += ',';
            out += to_string(a);
            first = false;
          }
        }
        out += ">> ";
      }
      print_into(*f.body(), out);
      break;
    }
  }
}

}  // namespace

std::string print_formula(const Formula& f) {
  std::string out;
  print_into(f, out);
  return out;
}

// ---------------------------------------------------------------- desugaring

namespace {

FormulaPtr neg(FormulaPtr f) {
  if (f->kind() == FormulaKind::Not) return f->body();
  return Formula::negation(std::move(f));
}

FormulaPtr forall_core(StrategyVariable v, FormulaPtr body) {
  return neg(Formula::exists(std::move(v), neg(std::move(body))));
}

}  // namespace

FormulaPtr normalize(const FormulaPtr& f) {
  switch (f->kind()) {
    case FormulaKind::True:
    case FormulaKind::Atom:
      return f;
    case FormulaKind::Not:
      return neg(normalize(f->body()));
    case FormulaKind::Or:
      return Formula::disjunction(normalize(f->lhs()), normalize(f->rhs()));
    case FormulaKind::And:
      return neg(Formula::disjunction(neg(normalize(f->lhs())), neg(normalize(f->rhs()))));
    case FormulaKind::Implies:
      return Formula::disjunction(neg(normalize(f->lhs())), normalize(f->rhs()));
    case FormulaKind::Next:
      return Formula::next(normalize(f->body()));
    case FormulaKind::Globally:
      return Formula::globally(normalize(f->body()));
    case FormulaKind::Until:
      return Formula::until(normalize(f->lhs()), normalize(f->rhs()));
    case FormulaKind::Eventually:
      return Formula::until(Formula::make_true(), normalize(f->body()));
    case FormulaKind::Exists:
      return Formula::exists(f->variable(), normalize(f->body()));
    case FormulaKind::ForAll:
      return forall_core(f->variable(), normalize(f->body()));
    case FormulaKind::CoalitionPath: {
      // Members commit first: E<members> A<others>, each block in agent order.
      FormulaPtr body = normalize(f->body());
      for (Agent a : {Agent::Env, Agent::Opp, Agent::Pro}) {
        if (!(f->coalition() & agent_bit(a))) body = forall_core(default_variable(a), body);
      }
      for (Agent a : {Agent::Env, Agent::Opp, Agent::Pro}) {
        if (f->coalition() & agent_bit(a)) body = Formula::exists(default_variable(a), body);
      }
      return body;
    }
  }
  return f;
}

AgentSet free_agents(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::True:
    case FormulaKind::Atom:
      return 0;
    case FormulaKind::Not:
      return free_agents(*f.body());
    case FormulaKind::Or:
    case FormulaKind::And:
    case FormulaKind::Implies:
      return AgentSet(free_agents(*f.lhs()) | free_agents(*f.rhs()));
    case FormulaKind::Next:
    case FormulaKind::Globally:
    case FormulaKind::Eventually:
      return kAllAgents;
    case FormulaKind::Until:
      return kAllAgents;
    case FormulaKind::Exists:
    case FormulaKind::ForAll:
      return AgentSet(free_agents(*f.body()) & ~agent_bit(f.variable().agent));
    case FormulaKind::CoalitionPath:
      return 0;
  }
  return 0;
}

std::size_t node_count(const Formula& f) {
  std::size_t n = 1;
  if (f.lhs()) n += node_count(*f.lhs());
  if (f.rhs()) n += node_count(*f.rhs());
  return n;
}

std::vector<std::string> atom_arguments(const Formula& f) {
  std::vector<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (g.kind() == FormulaKind::Atom &&
        std::find(out.begin(), out.end(), g.atom_arg()) == out.end()) {
      out.push_back(g.atom_arg());
    }
    if (g.lhs()) walk(*g.lhs());
    if (g.rhs()) walk(*g.rhs());
  };
  walk(f);
  return out;
}

// ---------------------------------------------------------------- builders

namespace {

std::vector<std::string> sorted_names(const ArgumentationFramework& af) {
  std::vector<std::string> names = af.names();
  std::sort(names.begin(), names.end());
  return names;
}

template <class Make>
FormulaPtr big_or(const std::vector<std::string>& names, Make make) {
  if (names.empty()) return Formula::negation(Formula::make_true());
  FormulaPtr f = make(names[0]);
  for (std::size_t i = 1; i < names.size(); ++i) f = Formula::disjunction(f, make(names[i]));
  return f;
}

template <class Make>
FormulaPtr big_and(const std::vector<std::string>& names, Make make) {
  if (names.empty()) return Formula::make_true();
  FormulaPtr f = make(names[0]);
  for (std::size_t i = 1; i < names.size(); ++i) f = Formula::conjunction(f, make(names[i]));
  return f;
}

const StrategyVariable kP = default_variable(Agent::Pro);
const StrategyVariable kO = default_variable(Agent::Opp);
const StrategyVariable kE = default_variable(Agent::Env);

FormulaPtr pro(const std::string& x) { return Formula::atom(Agent::Pro, x); }
FormulaPtr opp(const std::string& x) { return Formula::atom(Agent::Opp, x); }

// A G !G Opp_i over all i, under every Opp strategy.
FormulaPtr phi1(const std::vector<std::string>& names) {
  return Formula::forall(kO, Formula::globally(big_and(names, [](const std::string& x) {
                           return Formula::negation(Formula::globally(opp(x)));
                         })));
}

// Any argument Opp can steer Pro into asserting, Opp can never assert.
FormulaPtr phi2(const std::vector<std::string>& names) {
  return big_and(names, [](const std::string& x) {
    return Formula::implication(Formula::exists(kO, Formula::eventually(pro(x))),
                                Formula::forall(kO, Formula::globally(Formula::negation(opp(x)))));
  });
}

// Every opponent argument fails the mirrored admissibility test. The mirror
// swaps the quantified agents; phi32 keeps the atoms of phi2 unchanged, and
// that condition is symmetric in Pro and Opp anyway.
FormulaPtr phi3(const std::vector<std::string>& names) {
  FormulaPtr phi31 = Formula::forall(kP, Formula::globally(big_and(names, [](const std::string& x) {
                                       return Formula::negation(Formula::globally(pro(x)));
                                     })));
  FormulaPtr phi32 = big_and(names, [](const std::string& x) {
    return Formula::implication(Formula::exists(kP, Formula::eventually(pro(x))),
                                Formula::forall(kP, Formula::globally(Formula::negation(opp(x)))));
  });
  FormulaPtr some_opp = big_or(names, [](const std::string& x) { return opp(x); });
  FormulaPtr guard = Formula::implication(
      some_opp, Formula::negation(Formula::exists(kO, Formula::conjunction(phi31, phi32))));
  return Formula::forall(kO, Formula::globally(guard));
}

}  // namespace

FormulaPtr grounded_formula(const ArgumentationFramework& af) {
  const auto names = sorted_names(af);
  FormulaPtr target = big_or(names, [](const std::string& x) {
    return Formula::coalition_path(0, Formula::globally(pro(x)));
  });
  return Formula::exists(kP, Formula::forall(kO, Formula::forall(kE, Formula::eventually(target))));
}

FormulaPtr admissible_formula(const ArgumentationFramework& af) {
  const auto names = sorted_names(af);
  return Formula::exists(kP, Formula::forall(kE, Formula::conjunction(phi1(names), phi2(names))));
}

FormulaPtr ideal_formula(const ArgumentationFramework& af) {
  const auto names = sorted_names(af);
  return Formula::exists(
      kP, Formula::forall(kE, Formula::conjunction(
                                  Formula::conjunction(phi1(names), phi2(names)), phi3(names))));
}

}  // namespace debate
