#include <doctest.h>

#include <algorithm>
#include <chrono>
#include <random>

#include "dfl/engine.hpp"
#include "dfl/serialize.hpp"
#include "gen.hpp"
#include "oracle.hpp"

using namespace dfl;

namespace {

ArgTheory chain(int n, RuleKind kind = RuleKind::Defeasible) {
  ArgTheory t;
  t.facts = {lit("a1")};
  for (int i = 1; i < n; ++i)
    t.rules.push_back(make_rule("r" + std::to_string(i), kind,
                                {lit("a" + std::to_string(i))},
                                lit("a" + std::to_string(i + 1))));
  return t;
}

}  // namespace

TEST_CASE("definite conclusions chain through strict rules") {
  ArgTheory t;
  t.facts = {lit("a")};
  t.rules = {make_rule("r1", RuleKind::Strict, {lit("a")}, lit("b"))};
  Extension ext = compute_definite(t);
  CHECK(ext.at(lit("a")).delta == Status::Proved);
  CHECK(ext.at(lit("b")).delta == Status::Proved);

  t.facts.clear();
  ext = compute_definite(t);
  CHECK(ext.at(lit("a")).delta == Status::Rejected);
  CHECK(ext.at(lit("b")).delta == Status::Rejected);
}

TEST_CASE("strict cycles stay undetermined at the definite level") {
  ArgTheory t;
  t.rules = {make_rule("r1", RuleKind::Strict, {lit("b")}, lit("a")),
             make_rule("r2", RuleKind::Strict, {lit("a")}, lit("b"))};
  Extension ext = compute_definite(t);
  CHECK(ext.at(lit("a")).delta == Status::Undetermined);
  CHECK(ext.at(lit("b")).delta == Status::Undetermined);
}

TEST_CASE("symmetric ambiguity rejects both conclusions") {
  ArgTheory t;
  t.rules = {make_rule("r1", RuleKind::Defeasible, {}, lit("q")),
             make_rule("r2", RuleKind::Defeasible, {}, lit("q", true))};
  Extension ext = compute_extension(t);
  CHECK(ext.at(lit("q")).partial == Status::Rejected);
  CHECK(ext.at(lit("q", true)).partial == Status::Rejected);
}

TEST_CASE("superiority resolves a symmetric clash") {
  ArgTheory t;
  t.rules = {make_rule("r1", RuleKind::Defeasible, {}, lit("q")),
             make_rule("r2", RuleKind::Defeasible, {}, lit("q", true))};
  t.superiority = {{"r1", "r2"}};
  Extension ext = compute_extension(t);
  CHECK(ext.at(lit("q")).partial == Status::Proved);
  CHECK(ext.at(lit("q", true)).partial == Status::Rejected);
}

TEST_CASE("team defeat fails without superiority: full second example") {
  // Both players' rules on the table: b has supports {a=>b, c=>b} and the
  // attack e,f => ~b fires, so b is rejected.
  ArgTheory t;
  t.facts = {lit("a"), lit("d"), lit("f")};
  t.rules = {make_rule("p1", RuleKind::Defeasible, {lit("a")}, lit("b")),
             make_rule("p2", RuleKind::Defeasible, {lit("d")}, lit("c")),
             make_rule("p3", RuleKind::Defeasible, {lit("c")}, lit("b")),
             make_rule("o1", RuleKind::Defeasible, {lit("c")}, lit("e")),
             make_rule("o2", RuleKind::Defeasible, {lit("e"), lit("f")}, lit("b", true))};
  Extension ext = compute_extension(t);
  CHECK(ext.at(lit("b")).partial == Status::Rejected);
}

TEST_CASE("defeaters block but never support") {
  ArgTheory t;
  t.rules = {make_rule("r1", RuleKind::Defeater, {}, lit("q"))};
  Extension ext = compute_extension(t);
  CHECK(ext.at(lit("q")).partial == Status::Rejected);

  t.rules.push_back(make_rule("r2", RuleKind::Defeasible, {}, lit("q", true)));
  ext = compute_extension(t);
  // the defeater attacks ~q without proving q
  CHECK(ext.at(lit("q", true)).partial == Status::Rejected);
  CHECK(ext.at(lit("q")).partial == Status::Rejected);
}

TEST_CASE("is_applicable and is_discarded read the partial extension") {
  ArgTheory t;
  t.facts = {lit("a")};
  t.rules = {make_rule("r1", RuleKind::Defeasible, {lit("a")}, lit("b")),
             make_rule("r2", RuleKind::Defeasible, {lit("z")}, lit("c")),
             make_rule("r3", RuleKind::Defeasible, {lit("u")}, lit("d")),
             make_rule("r4", RuleKind::Strict, {lit("u", true)}, lit("u")),
             make_rule("r5", RuleKind::Strict, {lit("u")}, lit("u", true))};
  Extension ext = compute_extension(t);

  Rule empty_rule = make_rule("e", RuleKind::Defeasible, {}, lit("x"));
  CHECK(is_applicable(empty_rule, ext));
  CHECK(!is_discarded(empty_rule, ext));
  CHECK(is_discarded(t.rules[1], ext));  // z is rejected
  // u is undetermined: neither applicable nor discarded
  CHECK(!is_applicable(t.rules[2], ext));
  CHECK(!is_discarded(t.rules[2], ext));
}

TEST_CASE("prove answers with a derivation trace") {
  ArgTheory t;
  t.facts = {lit("a")};
  auto yes_definite = prove(t, ProofTag{true, true}, lit("a"));
  CHECK(yes_definite.answer == Answer::Yes);
  CHECK(yes_definite.trace.lines.size() == 1);

  auto yes_partial = prove(t, ProofTag{true, false}, lit("a"));
  CHECK(yes_partial.answer == Answer::Yes);
  REQUIRE(yes_partial.trace.lines.size() == 2);
  CHECK(yes_partial.trace.lines.back().clause.find("+d(1)") == 0);
}

TEST_CASE("prove reproduces the third example's winning position") {
  // R_Pr fully played and both opponent rules played: d => ~c defeats f => c
  // by ambiguity, so (d,c) => ~b is discarded and b goes through.
  ArgTheory t;
  t.facts = {lit("a"), lit("d"), lit("f")};
  t.rules = {make_rule("p1", RuleKind::Defeasible, {lit("a")}, lit("b")),
             make_rule("p2", RuleKind::Defeasible, {lit("d")}, lit("c", true)),
             make_rule("o1", RuleKind::Defeasible, {lit("d"), lit("c")}, lit("b", true)),
             make_rule("o2", RuleKind::Defeasible, {lit("f")}, lit("c"))};
  auto result = prove(t, ProofTag{true, false}, lit("b"));
  CHECK(result.answer == Answer::Yes);
  CHECK(!result.trace.lines.empty());
}

TEST_CASE("traces reference only earlier lines") {
  dfltest::Rng rng(23);
  for (int i = 0; i < 100; ++i) {
    ArgTheory t = dfltest::random_arg_theory(rng);
    if (!validate_theory(t).empty()) continue;
    Extension ext = compute_extension(t);
    for (const auto& [literal, tags] : ext.entries) {
      for (bool definite : {true, false}) {
        Status s = definite ? tags.delta : tags.partial;
        if (s == Status::Undetermined) continue;
        auto result = prove(t, ProofTag{s == Status::Proved, definite}, literal);
        REQUIRE(result.answer == Answer::Yes);
        for (std::size_t li = 0; li < result.trace.lines.size(); ++li)
          for (std::size_t p : result.trace.lines[li].premises) CHECK(p < li);
      }
    }
  }
}

TEST_CASE("unmentioned literals are rejected, not errors") {
  ArgTheory t;
  t.facts = {lit("a")};
  CHECK(prove(t, ProofTag{false, true}, lit("nowhere")).answer == Answer::Yes);
  CHECK(prove(t, ProofTag{false, false}, lit("nowhere")).answer == Answer::Yes);
  CHECK(prove(t, ProofTag{true, false}, lit("nowhere")).answer == Answer::No);
}

TEST_CASE("extension agrees with the naive clause-iteration oracle") {
  dfltest::Rng rng(101);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    ArgTheory t = dfltest::random_arg_theory(rng, 6, 10);
    if (!validate_theory(t).empty()) continue;
    ++checked;
    Extension fast = compute_extension(t);
    Extension slow = dfltest::naive_arg_extension(t);
    for (const auto& [literal, tags] : slow.entries) {
      CHECK(fast.at(literal).delta == tags.delta);
      CHECK(fast.at(literal).partial == tags.partial);
    }
  }
  CHECK(checked > 300);
}

TEST_CASE("acyclic atom graphs leave nothing undetermined") {
  dfltest::Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    // heads always use a later atom than every antecedent
    ArgTheory t;
    int atoms = 3 + rng.below(5);
    if (rng.chance(0.7)) t.facts.push_back(Literal{dfltest::atom_name(0), rng.chance(0.3)});
    int nrules = 1 + rng.below(8);
    for (int r = 0; r < nrules; ++r) {
      int head = 1 + rng.below(atoms - 1);
      std::vector<Antecedent> ants;
      for (int j = 0, n = rng.below(3); j < n; ++j)
        ants.push_back(Literal{dfltest::atom_name(rng.below(head)), rng.chance(0.4)});
      t.rules.push_back(make_rule("r" + std::to_string(r), dfltest::random_kind(rng),
                                  std::move(ants),
                                  Literal{dfltest::atom_name(head), rng.chance(0.4)}));
    }
    Extension ext = compute_extension(t);
    for (const auto& [literal, tags] : ext.entries) {
      CHECK(tags.delta != Status::Undetermined);
      CHECK(tags.partial != Status::Undetermined);
    }
  }
}

TEST_CASE("recomputation is idempotent and facts only help definite proof") {
  dfltest::Rng rng(5);
  for (int i = 0; i < 100; ++i) {
    ArgTheory t = dfltest::random_arg_theory(rng);
    if (!validate_theory(t).empty()) continue;
    Extension once = compute_extension(t);
    Extension twice = compute_extension(t);
    CHECK(extension_to_json(once) == extension_to_json(twice));

    ArgTheory more = t;
    more.facts.push_back(dfltest::random_literal(rng, 6));
    Extension bigger = compute_extension(more);
    for (const auto& [literal, tags] : once.entries)
      if (tags.delta == Status::Proved) CHECK(bigger.at(literal).delta == Status::Proved);
  }
}

TEST_CASE("rule order does not affect the result") {
  dfltest::Rng rng(9);
  for (int i = 0; i < 60; ++i) {
    ArgTheory t = dfltest::random_arg_theory(rng);
    if (!validate_theory(t).empty()) continue;
    auto baseline = extension_to_json(compute_extension(t));
    ArgTheory shuffled = t;
    std::shuffle(shuffled.rules.begin(), shuffled.rules.end(), rng.eng);
    std::shuffle(shuffled.facts.begin(), shuffled.facts.end(), rng.eng);
    CHECK(extension_to_json(compute_extension(shuffled)) == baseline);
  }
}

TEST_CASE("strict contradictions surface as warnings, not crashes") {
  ArgTheory t;
  t.facts = {lit("p"), lit("p", true)};
  Extension ext = compute_extension(t);
  CHECK(!ext.consistent());
  CHECK(ext.at(lit("p")).partial == Status::Proved);
  CHECK(ext.at(lit("p", true)).partial == Status::Proved);
}

TEST_CASE("long chains stay fast") {
  ArgTheory t = chain(10000);
  auto start = std::chrono::steady_clock::now();
  Extension ext = compute_extension(t);
  std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  CHECK(ext.at(lit("a10000")).partial == Status::Proved);
  CHECK(elapsed.count() < 1.0);
}
