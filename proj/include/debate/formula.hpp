#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "debate/framework.hpp"
#include "debate/interpreted_system.hpp"

namespace debate {

struct StrategyVariable {
  std::string name;
  Agent agent;

  friend bool operator==(const StrategyVariable&, const StrategyVariable&) = default;
};

/// Bit i set for agent i.
using AgentSet = std::uint8_t;
inline constexpr AgentSet kAllAgents = 0b111;
inline constexpr AgentSet agent_bit(Agent a) { return AgentSet(1U << static_cast<unsigned>(a)); }

enum class FormulaKind : std::uint8_t {
  True,
  Atom,
  Not,
  Or,
  And,
  Implies,
  Next,
  Globally,
  Until,
  Eventually,
  Exists,
  ForAll,
  CoalitionPath,
};

class Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

/// Immutable AST node. Atoms carry argument names, so a formula is not tied
/// to one framework until it is checked.
class Formula {
 public:
  FormulaKind kind() const noexcept { return kind_; }
  const FormulaPtr& lhs() const { return lhs_; }
  const FormulaPtr& rhs() const { return rhs_; }
  /// Operand of unary nodes, quantifiers and coalitions.
  const FormulaPtr& body() const { return lhs_; }

  Agent atom_owner() const noexcept { return owner_; }
  const std::string& atom_arg() const noexcept { return arg_; }
  const StrategyVariable& variable() const noexcept { return var_; }
  AgentSet coalition() const noexcept { return coalition_; }

  static FormulaPtr make_true();
  static FormulaPtr atom(Agent owner, std::string arg);
  static FormulaPtr negation(FormulaPtr f);
  static FormulaPtr disjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr conjunction(FormulaPtr a, FormulaPtr b);
  static FormulaPtr implication(FormulaPtr a, FormulaPtr b);
  static FormulaPtr next(FormulaPtr f);
  static FormulaPtr globally(FormulaPtr f);
  static FormulaPtr until(FormulaPtr a, FormulaPtr b);
  static FormulaPtr eventually(FormulaPtr f);
  static FormulaPtr exists(StrategyVariable v, FormulaPtr f);
  static FormulaPtr forall(StrategyVariable v, FormulaPtr f);
  static FormulaPtr coalition_path(AgentSet coalition, FormulaPtr path);

 private:
  FormulaKind kind_ = FormulaKind::True;
  FormulaPtr lhs_;
  FormulaPtr rhs_;
  Agent owner_ = Agent::Pro;
  std::string arg_;
  StrategyVariable var_;
  AgentSet coalition_ = 0;
};

bool structurally_equal(const Formula& a, const Formula& b);

/// Variable names p, o, e stand for the Pro, Opp, Env variables.
StrategyVariable default_variable(Agent a);

class FormulaSyntaxError : public std::invalid_argument {
 public:
  FormulaSyntaxError(std::size_t position, const std::string& what)
      : std::invalid_argument("formula syntax error at offset " + std::to_string(position) + ": " +
                              what),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Grammar, loosest binding first:
///
///   f  ::= d ( "=>" f )?
///   d  ::= c ( "|" c )*
///   c  ::= u ( "&" u )*
///   u  ::= p ( "U" u )?
///   p  ::= "!" p | "X" p | "G" p | "F" p
///        | "E<" var (":" agent)? ">" p | "A<" var (":" agent)? ">" p
///        | "<<" agents? ">>" p | "A" p | "E" p
///        | "true" | "Pro_" NAME | "Opp_" NAME | "(" f ")"
///
/// An untyped variable is typed by its first letter (p, o, e). Bare A / E are
/// the CTL path quantifiers <<>> and <<Pro,Opp,Env>>.
FormulaPtr parse_formula(std::string_view text);

/// Also rejects atoms naming arguments outside `af`.
FormulaPtr parse_formula(std::string_view text, const ArgumentationFramework& af);

/// Canonical text; every binary node parenthesized.
std::string print_formula(const Formula& f);

/// Core grammar only: True, Atom, Not, Or, Next, Globally, Until, Exists.
/// And, Implies, Eventually, ForAll and coalitions are expanded; double
/// negations are dropped. Idempotent. <<C>> psi becomes E<c...> A<d...> psi:
/// members existentially first, then the others universally, each block in
/// Pro, Opp, Env order with the default variable names.
FormulaPtr normalize(const FormulaPtr& f);

/// Agents whose strategy the formula reads without binding it itself.
AgentSet free_agents(const Formula& f);
inline bool is_sentence(const Formula& f) { return free_agents(f) == 0; }

std::size_t node_count(const Formula& f);

/// Every argument named by an atom of f, in first-occurrence order.
std::vector<std::string> atom_arguments(const Formula& f);

/// <<Pro>> F ( OR_i A G Pro_i ), coalition and A expanded into quantifiers.
FormulaPtr grounded_formula(const ArgumentationFramework& af);

/// E<p> A<e> ( phi1 & phi2 ).
FormulaPtr admissible_formula(const ArgumentationFramework& af);

/// E<p> A<e> ( phi1 & phi2 & phi3 ).
FormulaPtr ideal_formula(const ArgumentationFramework& af);

}  // namespace debate
