#pragma once

#include <random>
#include <set>
#include <string>
#include <vector>

#include "dfl/game.hpp"
#include "dfl/theory.hpp"

namespace dfltest {

struct Rng {
  std::mt19937_64 eng;

  explicit Rng(std::uint64_t seed) : eng(seed) {}

  int below(int n) { return (int)(eng() % (std::uint64_t)n); }
  bool chance(double p) {
    return std::uniform_real_distribution<double>(0, 1)(eng) < p;
  }
};

inline std::string atom_name(int i) { return std::string(1, (char)('a' + i)); }

inline dfl::Literal random_literal(Rng& rng, int atoms) {
  return dfl::Literal{atom_name(rng.below(atoms)), rng.chance(0.4)};
}

inline dfl::RuleKind random_kind(Rng& rng) {
  int k = rng.below(100);
  if (k < 25) return dfl::RuleKind::Strict;
  if (k < 85) return dfl::RuleKind::Defeasible;
  return dfl::RuleKind::Defeater;
}

// Declared pairs are added only while they keep the relation acyclic.
inline bool keeps_acyclic(const std::vector<dfl::SuperiorityPair>& pairs,
                          const std::string& w, const std::string& l) {
  if (w == l) return false;
  std::vector<std::string> frontier{l};
  std::set<std::string> seen{l};
  while (!frontier.empty()) {
    std::string cur = frontier.back();
    frontier.pop_back();
    if (cur == w) return false;
    for (const auto& [pw, pl] : pairs)
      if (pw == cur && seen.insert(pl).second) frontier.push_back(pl);
  }
  return true;
}

inline dfl::ArgTheory random_arg_theory(Rng& rng, int max_atoms = 6, int max_rules = 10) {
  dfl::ArgTheory t;
  int atoms = 1 + rng.below(max_atoms);
  int nfacts = rng.below(3);
  std::set<dfl::Literal> facts;
  for (int i = 0; i < nfacts; ++i) facts.insert(random_literal(rng, atoms));
  t.facts.assign(facts.begin(), facts.end());
  int nrules = 1 + rng.below(max_rules);
  for (int i = 0; i < nrules; ++i) {
    std::vector<dfl::Antecedent> ants;
    int nants = rng.below(4);
    for (int j = 0; j < nants; ++j) ants.push_back(random_literal(rng, atoms));
    t.rules.push_back(dfl::make_rule("r" + std::to_string(i + 1), random_kind(rng),
                                     std::move(ants), random_literal(rng, atoms)));
  }
  int nsup = rng.below(1 + nrules / 2);
  for (int i = 0; i < nsup; ++i) {
    const dfl::Rule& w = t.rules[rng.below(nrules)];
    // prefer opponents with the complementary head; fall back to any rule
    std::vector<const dfl::Rule*> losers;
    for (const dfl::Rule& r : t.rules)
      if (r.consequent == dfl::complement(w.consequent)) losers.push_back(&r);
    const dfl::Rule* l = losers.empty() || rng.chance(0.15)
                             ? &t.rules[rng.below(nrules)]
                             : losers[rng.below((int)losers.size())];
    if (keeps_acyclic(t.superiority, w.label, l->label))
      t.superiority.emplace_back(w.label, l->label);
  }
  return t;
}

inline dfl::Antecedent random_agent_antecedent(Rng& rng, int atoms) {
  int k = rng.below(100);
  if (k < 55) return random_literal(rng, atoms);
  dfl::Modality mode = rng.chance(0.5) ? dfl::Modality::OBL : dfl::Modality::INT;
  bool outer = k >= 85;
  return dfl::ModalLiteral{outer, mode, random_literal(rng, atoms)};
}

inline dfl::AgentTheory random_agent_theory(Rng& rng, int max_atoms = 8, int max_rules = 12) {
  dfl::AgentTheory t;
  int atoms = 1 + rng.below(max_atoms);
  int nfacts = rng.below(4);
  std::set<std::string> fact_keys;
  for (int i = 0; i < nfacts; ++i) {
    dfl::Fact f;
    int k = rng.below(100);
    if (k < 40) f = random_literal(rng, atoms);
    else if (k < 75)
      f = dfl::ModalLiteral{false, dfl::Modality::INT, random_literal(rng, atoms)};
    else f = dfl::ModalLiteral{false, dfl::Modality::OBL, random_literal(rng, atoms)};
    if (fact_keys.insert(dfl::to_string(f)).second) t.facts.push_back(f);
  }
  int nrules = 1 + rng.below(max_rules);
  const dfl::Modality modes[3] = {dfl::Modality::BEL, dfl::Modality::OBL, dfl::Modality::INT};
  for (int i = 0; i < nrules; ++i) {
    std::vector<dfl::Antecedent> ants;
    int nants = rng.below(4);
    for (int j = 0; j < nants; ++j) ants.push_back(random_agent_antecedent(rng, atoms));
    t.rules.push_back(dfl::make_rule("r" + std::to_string(i + 1), random_kind(rng),
                                     modes[rng.below(3)], std::move(ants),
                                     random_literal(rng, atoms)));
  }
  int nsup = rng.below(1 + nrules / 2);
  for (int i = 0; i < nsup; ++i) {
    const dfl::Rule& w = t.rules[rng.below(nrules)];
    std::vector<const dfl::Rule*> losers;
    for (const dfl::Rule& r : t.rules)
      if (*r.mode == *w.mode && r.consequent == dfl::complement(w.consequent))
        losers.push_back(&r);
    if (losers.empty()) continue;
    const dfl::Rule* l = losers[rng.below((int)losers.size())];
    if (keeps_acyclic(t.superiority, w.label, l->label))
      t.superiority.emplace_back(w.label, l->label);
  }
  return t;
}

struct RandomGame {
  dfl::GameParts parts;
  dfl::GameConfig config;
};

// Random game over a consistent argumentation theory; rules are partitioned
// among common/proponent/opponent and the goal is drawn from the mentioned atoms.
inline RandomGame random_game(Rng& rng, int max_atoms = 6, int max_rules = 12,
                              int max_private = 12) {
  for (;;) {
    dfl::ArgTheory t = random_arg_theory(rng, max_atoms, max_rules);
    if (!dfl::validate_theory(t).empty()) continue;
    dfl::Extension ext = dfl::compute_extension(t);
    if (!ext.consistent()) continue;
    RandomGame game;
    game.parts.facts = t.facts;
    game.parts.superiority = t.superiority;
    int privates = 0;
    for (const dfl::Rule& r : t.rules) {
      int bucket = rng.below(3);
      if (bucket != 0 && privates >= max_private) bucket = 0;
      if (bucket == 0) game.parts.common.push_back(r);
      else if (bucket == 1) {
        game.parts.pr_private.push_back(r);
        ++privates;
      } else {
        game.parts.op_private.push_back(r);
        ++privates;
      }
    }
    game.config.goal = random_literal(rng, 1 + rng.below(max_atoms));
    game.config.win_mode = rng.chance(0.5) ? dfl::WinMode::Strong : dfl::WinMode::Weak;
    return game;
  }
}

}  // namespace dfltest
