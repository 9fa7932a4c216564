#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "debate/apx.hpp"
#include "debate/framework.hpp"
#include "debate/semantics.hpp"

using namespace debate;

namespace {

ArgumentationFramework debate_fixture() { return load_apx(DEBATE_FIXTURES "/debate.apx"); }

Extension ext(const ArgumentationFramework& af, std::vector<std::string> names) {
  return Extension::from_names(af, names);
}

std::vector<Extension> family(const ArgumentationFramework& af,
                              std::vector<std::vector<std::string>> sets) {
  std::vector<Extension> out;
  for (auto& s : sets) out.push_back(ext(af, s));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("parse_apx transcribes declarations in order") {
  const auto af = parse_apx("arg(a). arg(b). att(a,b).");
  CHECK(af.size() == 2);
  CHECK(af.names() == std::vector<std::string>{"a", "b"});
  REQUIRE(af.attack_count() == 1);
  CHECK(af.attacks(af.id("a"), af.id("b")));
  CHECK_FALSE(af.attacks(af.id("b"), af.id("a")));
}

TEST_CASE("parse_apx tolerates comments and layout") {
  const auto af = parse_apx("% header\n  arg( x ) .arg(y).\n\natt(x , y). % trailing\natt(y,y).");
  CHECK(af.size() == 2);
  CHECK(af.attack_count() == 2);
  CHECK(af.attacks(af.id("y"), af.id("y")));
}

TEST_CASE("parse_apx rejects malformed input with a line number") {
  CHECK_THROWS_AS(parse_apx("att(a,b)."), ApxError);
  CHECK_THROWS_AS(parse_apx("arg(a).\narg(a)."), ApxError);
  try {
    parse_apx("arg(a).\narg(b).\natt(a,c).");
    FAIL("expected an error");
  } catch (const ApxError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(parse_apx("arg(a"), ApxError);
  CHECK_THROWS_AS(parse_apx("arg(a-b)."), ApxError);
  CHECK_THROWS_AS(parse_apx("foo(a)."), ApxError);
}

TEST_CASE("debate fixture has seven arguments and nine attacks") {
  const auto af = debate_fixture();
  CHECK(af.size() == 7);
  CHECK(af.attack_count() == 9);
  CHECK(af.attacks(af.id("e"), af.id("d")));
  CHECK(af.attacks(af.id("b"), af.id("b")));
}

TEST_CASE("emit_apx round-trips and keeps self-attacks") {
  ArgumentationFramework single;
  single.add_argument("a");
  CHECK(emit_apx(single) == "arg(a).\n");

  ArgumentationFramework loop;
  loop.add_argument("a");
  loop.add_argument("b");
  loop.add_attack("b", "b");
  CHECK(emit_apx(loop).find("att(b,b).") != std::string::npos);

  const auto af = debate_fixture();
  const std::string text = emit_apx(af);
  CHECK(std::count(text.begin(), text.end(), '\n') == 16);
  std::size_t args = 0, atts = 0;
  for (std::size_t pos = 0; (pos = text.find("arg(", pos)) != std::string::npos; ++pos) ++args;
  for (std::size_t pos = 0; (pos = text.find("att(", pos)) != std::string::npos; ++pos) ++atts;
  CHECK(args == 7);
  CHECK(atts == 9);
  CHECK(parse_apx(text) == af);
}

TEST_CASE("generate_random edge probabilities") {
  const auto none = generate_random(5, 0.0, 7);
  CHECK(none.size() == 5);
  CHECK(none.attack_count() == 0);
  const auto all = generate_random(5, 1.0, 7);
  CHECK(all.attack_count() == 20);
  for (ArgId x = 0; x < 5; ++x) CHECK_FALSE(all.attacks(x, x));
  CHECK(all.name(4) == "a4");
  CHECK_THROWS_AS(generate_random(5, 1.5, 1), std::invalid_argument);
  CHECK_THROWS_AS(generate_random(5, -0.1, 1), std::invalid_argument);
}

TEST_CASE("generate_random(20, 0.3, 42) is frozen") {
  // Count and endpoints taken from an independent mt19937_64 implementation.
  const auto af = generate_random(20, 0.3, 42);
  CHECK(af.attack_count() == 114);
  const auto& att = af.attacks();
  auto named = [&](const Attack& a) { return af.name(a.attacker) + "," + af.name(a.target); };
  CHECK(named(att[0]) == "a0,a4");
  CHECK(named(att[1]) == "a0,a6");
  CHECK(named(att[5]) == "a1,a0");
  CHECK(named(att[113]) == "a19,a17");
  CHECK(generate_random(20, 0.3, 42) == af);
  CHECK_FALSE(generate_random(20, 0.3, 43) == af);
}

TEST_CASE("attackers on the debate fixture") {
  const auto af = debate_fixture();
  CHECK(attackers(af, af.id("d")) == ext(af, {"e", "f"}));
  CHECK(attackers(af, af.id("g")).empty());
  CHECK(attackers(af, af.id("b")) == ext(af, {"a", "b"}));
  CHECK_THROWS_AS(attackers(af, af.id("z")), UnknownArgument);
}

TEST_CASE("is_acceptable") {
  const auto af = debate_fixture();
  CHECK(is_acceptable(af, af.id("c"), ext(af, {"g", "e"})));
  CHECK_FALSE(is_acceptable(af, af.id("c"), Extension{}));
  CHECK(is_acceptable(af, af.id("g"), Extension{}));
}

TEST_CASE("satisfies on the debate fixture") {
  const auto af = debate_fixture();
  CHECK(satisfies(af, ext(af, {"c", "e", "g"}), SemanticsKind::Grounded));
  CHECK(satisfies(af, ext(af, {"a", "c", "e", "g"}), SemanticsKind::Preferred));
  CHECK_FALSE(satisfies(af, ext(af, {"a", "b"}), SemanticsKind::ConflictFree));
  CHECK(satisfies(af, ext(af, {"a", "c", "e", "g"}), SemanticsKind::Ideal));
  CHECK_FALSE(satisfies(af, ext(af, {"c", "e", "g"}), SemanticsKind::Ideal));
  CHECK(satisfies(af, ext(af, {"e"}), SemanticsKind::Admissible));
  CHECK_FALSE(satisfies(af, ext(af, {"c"}), SemanticsKind::Admissible));
}

TEST_CASE("grounded_extension") {
  const auto af = debate_fixture();
  CHECK(grounded_extension(af) == ext(af, {"c", "e", "g"}));
  ArgumentationFramework single;
  single.add_argument("a");
  CHECK(grounded_extension(single).size() == 1);
  ArgumentationFramework loop;
  loop.add_argument("b");
  loop.add_attack("b", "b");
  CHECK(grounded_extension(loop).empty());
}

TEST_CASE("extensions on the debate fixture") {
  const auto af = debate_fixture();
  CHECK(extensions(af, SemanticsKind::Complete) ==
        family(af, {{"c", "e", "g"}, {"a", "c", "e", "g"}}));
  CHECK(extensions(af, SemanticsKind::Grounded) == family(af, {{"c", "e", "g"}}));
  CHECK(extensions(af, SemanticsKind::Preferred) == family(af, {{"a", "c", "e", "g"}}));
  CHECK(extensions(af, SemanticsKind::Ideal) == family(af, {{"a", "c", "e", "g"}}));
  ArgumentationFramework single;
  single.add_argument("a");
  CHECK(extensions(single, SemanticsKind::Preferred) == family(single, {{"a"}}));
}

TEST_CASE("formatting is sorted by name") {
  const auto af = debate_fixture();
  CHECK(format_extension(af, ext(af, {"g", "c", "e"})) == "{c, e, g}");
  CHECK(format_extension(af, Extension{}) == "{}");
  CHECK(format_extensions(af, extensions(af, SemanticsKind::Complete)) ==
        "{{a, c, e, g}, {c, e, g}}");
}

TEST_CASE("accepted on the debate fixture") {
  const auto af = debate_fixture();
  CHECK(accepted(af, af.id("a"), SemanticsKind::Preferred));
  CHECK_FALSE(accepted(af, af.id("a"), SemanticsKind::Grounded));
  CHECK_FALSE(accepted(af, af.id("b"), SemanticsKind::Admissible));
  CHECK(accepted(af, af.id("a"), SemanticsKind::Ideal));
  CHECK_FALSE(accepted(af, af.id("f"), SemanticsKind::Ideal));
}

TEST_CASE("b lies in no admissible set by subset enumeration") {
  const auto af = debate_fixture();
  const ArgId b = af.id("b");
  for (std::uint32_t mask = 0; mask < (1U << af.size()); ++mask) {
    std::vector<ArgId> members;
    for (ArgId i = 0; i < af.size(); ++i) {
      if (mask >> i & 1U) members.push_back(i);
    }
    const Extension e(members);
    if (e.contains(b)) CHECK_FALSE(satisfies(af, e, SemanticsKind::Admissible));
  }
}

TEST_CASE("semantics names parse and print") {
  for (auto k : {SemanticsKind::ConflictFree, SemanticsKind::Admissible, SemanticsKind::Complete,
                 SemanticsKind::Grounded, SemanticsKind::Preferred, SemanticsKind::Ideal}) {
    CHECK(parse_semantics(to_string(k)) == k);
  }
  CHECK_FALSE(parse_semantics("stable").has_value());
}

TEST_CASE("enumeration bound is explicit") {
  const auto af = generate_random(8, 0.2, 3);
  CHECK_THROWS_AS(extensions(af, SemanticsKind::Preferred, 6), ResourceError);
  CHECK_NOTHROW(grounded_extension(generate_random(40, 0.2, 3)));
}

TEST_CASE("framework construction rules") {
  ArgumentationFramework af;
  af.add_argument("x");
  CHECK_THROWS_AS(af.add_argument("x"), std::invalid_argument);
  CHECK_THROWS_AS(af.add_argument(""), std::invalid_argument);
  CHECK_THROWS_AS(af.add_attack("x", "y"), UnknownArgument);
  af.add_argument("y");
  const AttackId first = af.add_attack("x", "y");
  CHECK(af.add_attack("x", "y") == first);
  CHECK(af.attack_count() == 1);
}
