#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "debate/apx.hpp"
#include "debate/formula.hpp"

using namespace debate;

namespace {

ArgumentationFramework debate_fixture() { return load_apx(DEBATE_FIXTURES "/debate.apx"); }

ArgumentationFramework singleton() {
  ArgumentationFramework af;
  af.add_argument("a");
  return af;
}

std::string text(const FormulaPtr& f) { return print_formula(*f); }

bool same(const FormulaPtr& a, const FormulaPtr& b) { return structurally_equal(*a, *b); }

}  // namespace

TEST_CASE("parse a quantified eventuality") {
  const auto f = parse_formula("E<p> F Pro_c");
  REQUIRE(f->kind() == FormulaKind::Exists);
  CHECK(f->variable() == StrategyVariable{"p", Agent::Pro});
  REQUIRE(f->body()->kind() == FormulaKind::Eventually);
  const auto& atom = f->body()->body();
  REQUIRE(atom->kind() == FormulaKind::Atom);
  CHECK(atom->atom_owner() == Agent::Pro);
  CHECK(atom->atom_arg() == "c");
}

TEST_CASE("syntax errors report a position") {
  CHECK_THROWS_AS(parse_formula("G Pro_"), FormulaSyntaxError);
  CHECK_THROWS_AS(parse_formula("Pro_a &"), FormulaSyntaxError);
  CHECK_THROWS_AS(parse_formula("(Pro_a"), FormulaSyntaxError);
  CHECK_THROWS_AS(parse_formula("E<q> Pro_a"), FormulaSyntaxError);
  CHECK_THROWS_AS(parse_formula("E<p:Judge> Pro_a"), FormulaSyntaxError);
  CHECK_THROWS_AS(parse_formula("Pro_a Pro_b"), FormulaSyntaxError);
  try {
    parse_formula("Pro_a & & Pro_b");
    FAIL("expected an error");
  } catch (const FormulaSyntaxError& e) {
    CHECK(e.position() == 8);
  }
}

TEST_CASE("atoms are checked against a supplied framework") {
  const auto af = debate_fixture();
  CHECK_NOTHROW(parse_formula("E<p> F Pro_c", af));
  CHECK_THROWS_AS(parse_formula("E<p> F Pro_z", af), FormulaSyntaxError);
}

TEST_CASE("precedence: not, until, and, or, implies") {
  CHECK(text(parse_formula("!Pro_a & Opp_b | Pro_c => X Pro_a U Pro_b => true")) ==
        "(((!Pro_a & Opp_b) | Pro_c) => ((X Pro_a U Pro_b) => true))");
  CHECK(text(parse_formula("Pro_a U Pro_b U Pro_c")) == "(Pro_a U (Pro_b U Pro_c))");
  CHECK(text(parse_formula("Pro_a | Pro_b | Pro_c")) == "((Pro_a | Pro_b) | Pro_c)");
  CHECK(text(parse_formula("E<p> Pro_a & Pro_b")) == "(E<p> Pro_a & Pro_b)");
}

TEST_CASE("variable typing") {
  CHECK(parse_formula("A<o1> X true")->variable() == StrategyVariable{"o1", Agent::Opp});
  CHECK(parse_formula("E<x:Env> X true")->variable() == StrategyVariable{"x", Agent::Env});
  CHECK(text(parse_formula("E<x:Env> X true")) == "E<x:Env> X true");
  CHECK(text(parse_formula("E<p:Pro> X true")) == "E<p> X true");
  const auto c = parse_formula("<<Pro,Env>> G true");
  CHECK(c->coalition() == (agent_bit(Agent::Pro) | agent_bit(Agent::Env)));
  CHECK(parse_formula("A G true")->coalition() == 0);
  CHECK(parse_formula("E G true")->coalition() == kAllAgents);
  CHECK(parse_formula("<<>> G true")->coalition() == 0);
}

TEST_CASE("normalization reaches the core grammar") {
  CHECK(text(normalize(parse_formula("F Pro_a"))) == "(true U Pro_a)");
  CHECK(text(normalize(parse_formula("Pro_a & Pro_b"))) == "!(!Pro_a | !Pro_b)");
  CHECK(text(normalize(parse_formula("Pro_a => Pro_b"))) == "(!Pro_a | Pro_b)");
  CHECK(text(normalize(parse_formula("A<o> G Pro_a"))) == "!E<o> !G Pro_a");
  CHECK(text(normalize(parse_formula("!!Pro_a"))) == "Pro_a");
  CHECK(text(normalize(parse_formula("<<Pro>> G Pro_a"))) == "E<p> !E<o> E<e> !G Pro_a");
  CHECK(text(normalize(parse_formula("<<Opp>> G Pro_a"))) == "E<o> !E<p> E<e> !G Pro_a");
  CHECK(text(normalize(parse_formula("E X Pro_a"))) == "E<p> E<o> E<e> X Pro_a");
}

TEST_CASE("free agents") {
  CHECK(free_agents(*parse_formula("G Pro_a")) == kAllAgents);
  CHECK(free_agents(*parse_formula("E<p> G Pro_a")) ==
        (agent_bit(Agent::Opp) | agent_bit(Agent::Env)));
  CHECK(free_agents(*parse_formula("Pro_a")) == 0);
  CHECK(is_sentence(*parse_formula("A X Pro_a")));
  CHECK(is_sentence(*parse_formula("E<p> A<o> A<e> X (Pro_a & E<o> G Pro_b)")));
  CHECK_FALSE(is_sentence(*parse_formula("E<p> A<o> X Pro_a")));
}

TEST_CASE("grounded formula on a single argument") {
  const auto f = grounded_formula(singleton());
  CHECK(text(f) == "E<p> A<o> A<e> F A G Pro_a");
  CHECK(is_sentence(*f));
}

TEST_CASE("admissible formula on a single argument") {
  const auto f = admissible_formula(singleton());
  CHECK(text(f) == "E<p> A<e> (A<o> G !G Opp_a & (E<o> F Pro_a => A<o> G !Opp_a))");
  CHECK(is_sentence(*f));
}

TEST_CASE("ideal formula on a single argument") {
  const auto f = ideal_formula(singleton());
  CHECK(text(f) ==
        "E<p> A<e> ((A<o> G !G Opp_a & (E<o> F Pro_a => A<o> G !Opp_a)) & "
        "A<o> G (Opp_a => !E<o> (A<p> G !G Pro_a & (E<p> F Pro_a => A<p> G !Opp_a))))");
  CHECK(is_sentence(*f));
}

TEST_CASE("fixture formulas range over all seven arguments in name order") {
  const auto af = debate_fixture();
  const std::vector<std::string> names{"a", "b", "c", "d", "e", "f", "g"};
  CHECK(atom_arguments(*grounded_formula(af)) == names);
  CHECK(atom_arguments(*admissible_formula(af)) == names);
  CHECK(atom_arguments(*ideal_formula(af)) == names);
  const std::string g = text(grounded_formula(af));
  CHECK(g.find("A G Pro_a | A G Pro_b") != std::string::npos);
  const std::string adm = text(admissible_formula(af));
  std::size_t opp_globally = 0;
  for (std::size_t pos = 0; (pos = adm.find("!G Opp_", pos)) != std::string::npos; ++pos) {
    ++opp_globally;
  }
  CHECK(opp_globally == 7);
  std::size_t implications = 0;
  for (std::size_t pos = 0; (pos = adm.find("=>", pos)) != std::string::npos; ++pos) ++implications;
  CHECK(implications == 7);
  // phi3 nests an existential over the opponent under G under a universal one.
  const std::string ideal = text(ideal_formula(af));
  CHECK(ideal.find("A<o> G (((((((Opp_a | Opp_b) | Opp_c)") != std::string::npos);
  CHECK(ideal.find("=> !E<o> (A<p> G") != std::string::npos);
}

TEST_CASE("node counts are linear in the number of arguments") {
  // Counted by hand from the builder shapes: quantifier prefix, n - 1
  // binary connectives per family and a fixed number of nodes per argument.
  for (std::size_t n : {1U, 2U, 3U, 7U, 12U}) {
    const auto af = generate_random(n, 0.3, n);
    CHECK(node_count(*grounded_formula(af)) == 4 * n + 3);
    CHECK(node_count(*admissible_formula(af)) == 13 * n + 3);
    CHECK(node_count(*ideal_formula(af)) == 28 * n + 9);
  }
}

TEST_CASE("builders survive printing and reparsing") {
  const auto af = debate_fixture();
  for (const auto& f : {grounded_formula(af), admissible_formula(af), ideal_formula(af)}) {
    const auto back = parse_formula(print_formula(*f), af);
    CHECK(same(back, f));
    CHECK(same(normalize(back), normalize(f)));
    CHECK(is_sentence(*normalize(f)));
  }
}

TEST_CASE("structural equality distinguishes variables and coalitions") {
  CHECK(same(parse_formula("E<p> X true"), parse_formula("E<p:Pro> X true")));
  CHECK_FALSE(same(parse_formula("E<p> X true"), parse_formula("E<p1> X true")));
  CHECK_FALSE(same(parse_formula("A G true"), parse_formula("E G true")));
  CHECK_FALSE(same(parse_formula("Pro_a"), parse_formula("Opp_a")));
}
