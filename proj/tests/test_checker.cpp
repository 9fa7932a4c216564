#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "debate/apx.hpp"
#include "debate/checker.hpp"
#include "debate/semantics.hpp"
#include "naive_checker.hpp"

using namespace debate;

namespace {

ArgumentationFramework debate_fixture() { return load_apx(DEBATE_FIXTURES "/debate.apx"); }

InterpretedSystem system_for(const ArgumentationFramework& af, const char* root,
                             StateSpace space = StateSpace::Full) {
  return build_interpreted_system(af, af.id(root), {space});
}

PositionalStrategy only_strategy(const InterpretedSystem& is, Agent a) {
  StrategyEnumerator it(is, a);
  auto f = it.next();
  REQUIRE(f.has_value());
  return *f;
}

/// Pro follows sigma (first move where sigma is silent); Opp and Env take
/// their first enumerated strategies.
Assignment complete_with(const InterpretedSystem& is, const PositionalStrategy& pro) {
  Assignment chi;
  chi.bind(default_variable(Agent::Pro), pro);
  chi.bind(default_variable(Agent::Opp), only_strategy(is, Agent::Opp));
  chi.bind(default_variable(Agent::Env), only_strategy(is, Agent::Env));
  return chi;
}

}  // namespace

TEST_CASE("grounded formula holds for c on the debate fixture") {
  const auto af = debate_fixture();
  for (auto space : {StateSpace::Full, StateSpace::Collapsed}) {
    const auto is = system_for(af, "c", space);
    const auto v = check(is, grounded_formula(af));
    CHECK(v.result == CheckResult::True);
    CHECK(accepted(af, af.id("c"), SemanticsKind::Grounded));
    REQUIRE(v.witness.has_value());
    CHECK_NOTHROW(validate_strategy(is, *v.witness));
    CHECK(is_winning(af, af.id("c"), to_proponent_strategy(is, *v.witness), WinningKind::Grounded));
  }
}

TEST_CASE("admissible formula fails for b on the debate fixture") {
  const auto af = debate_fixture();
  const auto v = check(system_for(af, "b"), admissible_formula(af));
  CHECK(v.result == CheckResult::False);
  CHECK_FALSE(v.witness.has_value());
  CHECK_FALSE(accepted(af, af.id("b"), SemanticsKind::Admissible));
}

TEST_CASE("every formula holds for a lone unattacked argument") {
  ArgumentationFramework af;
  af.add_argument("a");
  const auto is = build_interpreted_system(af, 0);
  for (const auto& f : {grounded_formula(af), admissible_formula(af), ideal_formula(af)}) {
    const auto v = check(is, f);
    CHECK(v.result == CheckResult::True);
    REQUIRE(v.witness.has_value());
    CHECK(v.witness->table.empty());
  }
  CHECK(check_grounded_fixpoint(is).result == CheckResult::True);
}

TEST_CASE("every fixture root agrees with the oracles and the reference evaluator") {
  const auto af = debate_fixture();
  const SemanticsOracle oracle(af);
  for (ArgId r = 0; r < af.size(); ++r) {
    const auto is = build_interpreted_system(af, r, {StateSpace::Collapsed});
    const bool g = oracle.accepted(r, SemanticsKind::Grounded);
    const bool adm = oracle.accepted(r, SemanticsKind::Admissible);
    const bool ide = oracle.accepted(r, SemanticsKind::Ideal);
    CAPTURE(af.name(r));
    CHECK((check(is, grounded_formula(af)).result == CheckResult::True) == g);
    CHECK((check(is, admissible_formula(af)).result == CheckResult::True) == adm);
    CHECK((check(is, ideal_formula(af)).result == CheckResult::True) == ide);
    CHECK((check_grounded_fixpoint(is).result == CheckResult::True) == g);
    CHECK(naive::holds(is, grounded_formula(af)) == g);
    CHECK(naive::holds(is, admissible_formula(af)) == adm);
    CHECK(naive::holds(is, ideal_formula(af)) == ide);
  }
}

TEST_CASE("G and U on lassos") {
  const auto af = debate_fixture();
  const auto is = system_for(af, "c");
  // First choices everywhere: d, then e, then the debate cycles between e
  // and f.
  const auto chi = complete_with(is, only_strategy(is, Agent::Pro));
  const Lasso l = play(is, chi, is.initial());
  REQUIRE(l.cycle_start < l.prefix.size());
  bool pro_e_everywhere = true;
  for (StateId s : l.prefix) {
    pro_e_everywhere = pro_e_everywhere && is.atom_holds(s, {Agent::Pro, af.id("e")});
  }
  CHECK(eval(is, chi, 0, parse_formula("G Pro_e")) == pro_e_everywhere);
  CHECK_FALSE(eval(is, chi, 0, parse_formula("G Pro_c")));
  CHECK(eval(is, chi, 0, parse_formula("Pro_c U Opp_d")));
  // Pro_g never holds on this play, so any until towards it fails.
  CHECK_FALSE(eval(is, chi, 0, parse_formula("true U Pro_g")));
  CHECK(eval(is, chi, 0, parse_formula("X Opp_d")));
  CHECK(eval(is, chi, 0, parse_formula("F G (Pro_e | Opp_f)")));
}

TEST_CASE("phi2 holds under the Pro strategy lifted from d -> e, f -> g") {
  const auto af = debate_fixture();
  const auto sigma3 = ProponentStrategy::from_names(af, {{"d", "e"}, {"f", "g"}});
  const auto adm = admissible_formula(af);
  // E<p> A<e> (phi1 & phi2)
  const FormulaPtr phi1 = adm->body()->body()->lhs();
  const FormulaPtr phi2 = adm->body()->body()->rhs();
  CHECK(is_winning(af, af.id("c"), sigma3, WinningKind::Admissible));
  for (auto space : {StateSpace::Full, StateSpace::Collapsed}) {
    const auto is = system_for(af, "c", space);
    const auto pro = positional_from(is, sigma3);
    CHECK_NOTHROW(validate_strategy(is, pro));
    Assignment chi;
    chi.bind(default_variable(Agent::Pro), pro);
    chi.bind(default_variable(Agent::Env), only_strategy(is, Agent::Env));
    CHECK(eval(is, chi, is.initial(), phi2));
    CHECK(eval(is, chi, is.initial(), phi1));
    CHECK(naive::eval(is, chi, is.initial(), *phi2));
  }
}

TEST_CASE("temporal operators need every agent bound") {
  const auto af = debate_fixture();
  const auto is = system_for(af, "c");
  Assignment chi;
  chi.bind(default_variable(Agent::Pro), only_strategy(is, Agent::Pro));
  CHECK_THROWS_AS(eval(is, chi, 0, parse_formula("G Pro_c")), std::logic_error);
  CHECK(eval(is, chi, 0, parse_formula("Pro_c")));
  CHECK(eval(is, chi, 0, parse_formula("A<o> A<e> X Opp_d")));
  CHECK_THROWS_AS(play(is, chi, 0), std::invalid_argument);
}

TEST_CASE("plays from terminal states and around a self-attack") {
  const auto af = debate_fixture();
  const auto g = system_for(af, "g");
  const auto lg = play(g, complete_with(g, only_strategy(g, Agent::Pro)), 0);
  CHECK(lg.prefix == std::vector<StateId>{0});
  CHECK(lg.cycle_start == 0);

  ArgumentationFramework loop;
  loop.add_argument("b");
  loop.add_attack("b", "b");
  for (auto space : {StateSpace::Full, StateSpace::Collapsed}) {
    const auto is = build_interpreted_system(loop, 0, {space});
    const auto l = play(is, complete_with(is, only_strategy(is, Agent::Pro)), 0);
    REQUIRE(l.prefix.size() == 3);
    CHECK(l.cycle_start == 1);
    CHECK(is.turn(l.prefix[1]) != is.turn(l.prefix[2]));
  }
}

TEST_CASE("lasso states stay inside the system") {
  const auto af = generate_random(5, 0.4, 9);
  const auto is = build_interpreted_system(af, 0);
  StrategyEnumerator pros(is, Agent::Pro, 50);
  std::size_t seen = 0;
  while (seen < 20) {
    auto f = pros.next();
    if (!f) break;
    const auto l = play(is, complete_with(is, *f), 0);
    CHECK(l.prefix.size() <= is.state_count() + 1);
    for (StateId s : l.prefix) CHECK(s < is.state_count());
    ++seen;
  }
}

TEST_CASE("strategy enumeration") {
  const auto af = debate_fixture();
  const auto g = system_for(af, "g");
  StrategyEnumerator none(g, Agent::Pro);
  CHECK(none.next().has_value());
  CHECK_FALSE(none.next().has_value());

  for (const char* root : {"a", "c", "d"}) {
    const auto is = system_for(af, root);
    StrategyEnumerator env(is, Agent::Env);
    REQUIRE(env.next().has_value());
    CHECK_FALSE(env.next().has_value());
    CHECK(strategy_count(is, Agent::Env) == 1);
  }

  const auto is = system_for(af, "c");
  std::uint64_t product = 1;
  for (StateId s = 0; s < is.state_count(); ++s) {
    const auto actions = is.enabled_actions(s, Agent::Pro);
    if (!actions[0].is_nothing()) product *= actions.size();
  }
  CHECK(strategy_count(is, Agent::Pro) == product);
  StrategyEnumerator it(is, Agent::Pro);
  std::uint64_t produced = 0;
  std::optional<PositionalStrategy> previous;
  while (auto f = it.next()) {
    CHECK_NOTHROW(validate_strategy(is, *f));
    if (previous) CHECK_FALSE(*previous == *f);
    previous = f;
    ++produced;
  }
  CHECK(produced == product);
  CHECK(product > 1);

  StrategyEnumerator bounded(is, Agent::Pro, 1);
  CHECK(bounded.next().has_value());
  CHECK_THROWS_AS(bounded.next(), ResourceError);
}

TEST_CASE("strategy validation") {
  const auto af = debate_fixture();
  const auto is = system_for(af, "c");
  auto f = only_strategy(is, Agent::Pro);
  CHECK_NOTHROW(validate_strategy(is, f));
  auto bad = f;
  bad.table.front().second = ActionId::of(af.attack_id(af.id("a"), af.id("b")));
  CHECK_THROWS_AS(validate_strategy(is, bad), std::invalid_argument);
  auto shorter = f;
  shorter.table.pop_back();
  CHECK_THROWS_AS(validate_strategy(is, shorter), std::invalid_argument);
  CHECK(format_positional(is, f).find("(c, Pro, d) -> attack(e,d)") != std::string::npos);
}

TEST_CASE("fixpoint engine on the debate fixture") {
  const auto af = debate_fixture();
  for (auto space : {StateSpace::Full, StateSpace::Collapsed}) {
    const auto is = system_for(af, "c", space);
    const auto v = check_grounded_fixpoint(is);
    CHECK(v.result == CheckResult::True);
    REQUIRE(v.witness.has_value());
    const auto sigma = to_proponent_strategy(is, *v.witness);
    CHECK(format_strategy(af, sigma) == "d -> e\nf -> g\n");
    CHECK(is_winning(af, af.id("c"), sigma, WinningKind::Grounded));
    CHECK(check_grounded_fixpoint(system_for(af, "a", space)).result == CheckResult::False);
  }
}

TEST_CASE("budgets yield clean non-verdicts") {
  const auto af = generate_random(7, 0.5, 4);
  const auto is = build_interpreted_system(af, 0, {StateSpace::Collapsed});
  Budget zero;
  zero.wall_seconds = 0.0;
  const auto t = check(is, ideal_formula(af), zero);
  CHECK(t.result == CheckResult::Timeout);
  CHECK_FALSE(t.witness.has_value());
  Budget few;
  few.max_strategies = 1;
  const auto r = check(is, ideal_formula(af), few);
  CHECK(r.result == CheckResult::ResourceExceeded);
  CHECK(to_string(CheckResult::ResourceExceeded) == "resource");
  CHECK(to_string(CheckResult::Timeout) == "timeout");
}

TEST_CASE("unknown atoms are rejected") {
  const auto af = debate_fixture();
  const auto is = system_for(af, "c");
  CHECK_THROWS_AS(check(is, parse_formula("E<p> A<o> A<e> F Pro_zz")), std::invalid_argument);
}

TEST_CASE("check is deterministic") {
  const auto af = generate_random(5, 0.4, 21);
  const auto is = build_interpreted_system(af, 1, {StateSpace::Collapsed});
  const auto a = check(is, admissible_formula(af));
  const auto b = check(is, admissible_formula(af));
  CHECK(a.result == b.result);
  CHECK(a.witness == b.witness);
  CHECK(a.strategies == b.strategies);
  CHECK(a.states_visited == b.states_visited);
}
