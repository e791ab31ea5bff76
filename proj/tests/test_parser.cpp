#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "dfl/parser.hpp"
#include "dfl/serialize.hpp"
#include "gen.hpp"

using namespace dfl;

TEST_CASE("a plain document parses as an argumentation theory") {
  ParsedTheory parsed = parse_theory("fact a. rule r1: a => b.");
  REQUIRE(std::holds_alternative<ArgTheory>(parsed));
  const ArgTheory& t = std::get<ArgTheory>(parsed);
  CHECK(t.facts == std::vector<Literal>{lit("a")});
  REQUIRE(t.rules.size() == 1);
  CHECK(t.rules[0].kind == RuleKind::Defeasible);
  CHECK(t.rules[0].consequent == lit("b"));
}

TEST_CASE("the worked agent theory parses with facts, modes and superiority") {
  ParsedTheory parsed = parse_theory(
      "fact INT p. fact INT s. "
      "rule r1[BEL]: p, s => q. rule r2[OBL]: => ~q. rule r3[BEL]: => s. "
      "sup r1 > r2.");
  REQUIRE(std::holds_alternative<AgentTheory>(parsed));
  const AgentTheory& t = std::get<AgentTheory>(parsed);
  CHECK(t.facts.size() == 2);
  REQUIRE(t.rules.size() == 3);
  CHECK(t.rules[1].mode == Modality::OBL);
  CHECK(t.rules[1].consequent == lit("q", true));
  CHECK(t.superiority == std::vector<SuperiorityPair>{{"r1", "r2"}});
  CHECK(validate_theory(t).empty());
}

TEST_CASE("rules take a single consequent") {
  CHECK_THROWS_AS((void)parse_theory("rule r: a -> b -> c."), ParseError);
}

TEST_CASE("arrows distinguish the three rule kinds") {
  ParsedTheory parsed =
      parse_theory("rule r1: a -> b. rule r2: a => b. rule r3: a ~> b.");
  const ArgTheory& t = std::get<ArgTheory>(parsed);
  CHECK(t.rules[0].kind == RuleKind::Strict);
  CHECK(t.rules[1].kind == RuleKind::Defeasible);
  CHECK(t.rules[2].kind == RuleKind::Defeater);
}

TEST_CASE("modal antecedents and outer negation parse in agent rules") {
  ParsedTheory parsed = parse_theory("rule r[OBL]: OBL a, !INT b, c => d.");
  const AgentTheory& t = std::get<AgentTheory>(parsed);
  REQUIRE(t.rules[0].antecedents.size() == 3);
  CHECK(std::get<ModalLiteral>(t.rules[0].antecedents[0]) ==
        ModalLiteral{false, Modality::OBL, lit("a")});
  CHECK(std::get<ModalLiteral>(t.rules[0].antecedents[1]) ==
        ModalLiteral{true, Modality::INT, lit("b")});
}

TEST_CASE("belief never appears as a modal prefix") {
  CHECK_THROWS_AS((void)parse_theory("fact BEL p."), ParseError);
  CHECK_THROWS_AS((void)parse_theory("rule r[OBL]: BEL a => b."), ParseError);
}

TEST_CASE("mixing modeless rules into an agent document is an error") {
  CHECK_THROWS_AS((void)parse_theory("fact INT p. rule r: a => b."), ParseError);
}

TEST_CASE("parse errors carry source positions") {
  try {
    (void)parse_theory("fact a.\nrule r1 a => b.");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.span.line == 2);
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("game files parse sections, goal and mode") {
  GameDocument doc = parse_game(
      "goal b. mode weak.\n"
      "fact a.\n"
      "rule c1: a => z.\n"  // before any marker: common
      "@proponent rule p1: a => b.\n"
      "@opponent rule o1: a => ~b.\n"
      "sup p1 > o1.\n");
  CHECK(doc.config.goal == lit("b"));
  CHECK(doc.config.win_mode == WinMode::Weak);
  CHECK(doc.parts.common.size() == 1);
  CHECK(doc.parts.pr_private.size() == 1);
  CHECK(doc.parts.op_private.size() == 1);
  CHECK(doc.parts.superiority.size() == 1);
}

TEST_CASE("games demand exactly one goal and no modes") {
  CHECK_THROWS_AS((void)parse_game("fact a."), ParseError);
  CHECK_THROWS_AS((void)parse_game("goal a. goal b."), ParseError);
  CHECK_THROWS_AS((void)parse_game("goal a. rule r[OBL]: => a."), ParseError);
  CHECK_THROWS_AS((void)parse_game("goal a. mode sideways."), ParseError);
}

TEST_CASE("serialization round-trips both dialects") {
  dfltest::Rng rng(55);
  for (int i = 0; i < 80; ++i) {
    ArgTheory t = dfltest::random_arg_theory(rng);
    std::string text = to_dfl(t);
    ParsedTheory back = parse_theory(text);
    REQUIRE(std::holds_alternative<ArgTheory>(back));
    CHECK(to_dfl(std::get<ArgTheory>(back)) == text);
  }
  for (int i = 0; i < 80; ++i) {
    AgentTheory t = dfltest::random_agent_theory(rng);
    bool modal = !t.rules.empty();  // rules always carry modes
    if (!modal) continue;
    std::string text = to_dfl(t);
    ParsedTheory back = parse_theory(text);
    REQUIRE(std::holds_alternative<AgentTheory>(back));
    CHECK(to_dfl(std::get<AgentTheory>(back)) == text);
  }
}

TEST_CASE("all fixtures parse cleanly") {
  namespace fs = std::filesystem;
  int seen = 0;
  for (const auto& entry : fs::directory_iterator(DFL_FIXTURE_DIR)) {
    std::ifstream in(entry.path());
    std::ostringstream os;
    os << in.rdbuf();
    ++seen;
    if (entry.path().extension() == ".dfl") {
      ParsedTheory parsed = parse_theory(os.str());
      bool valid = std::holds_alternative<AgentTheory>(parsed)
                       ? validate_theory(std::get<AgentTheory>(parsed)).empty()
                       : validate_theory(std::get<ArgTheory>(parsed)).empty();
      CHECK(valid);
    } else {
      GameDocument doc = parse_game(os.str());
      CHECK(validate_theory(doc.parts.combined()).empty());
    }
  }
  CHECK(seen >= 4);
}
