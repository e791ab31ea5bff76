#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "dfl/literal.hpp"

namespace dfl {

enum class RuleKind : std::uint8_t { Strict, Defeasible, Defeater };

std::string_view arrow_of(RuleKind k);  // "->", "=>", "~>"

struct Rule {
  std::string label;
  RuleKind kind = RuleKind::Defeasible;
  std::optional<Modality> mode;          // set in agent theories only
  std::vector<Antecedent> antecedents;   // set semantics, duplicates collapsed
  Literal consequent;

  friend bool operator==(const Rule&, const Rule&) = default;
};

// Builders that collapse duplicate antecedents, keeping first occurrence.
Rule make_rule(std::string label, RuleKind kind, std::vector<Antecedent> antecedents,
               Literal consequent);
Rule make_rule(std::string label, RuleKind kind, Modality mode,
               std::vector<Antecedent> antecedents, Literal consequent);

// Facts of an agent theory: plain literals or modal literals (never
// outer-negated, which validation enforces). Shares the Antecedent
// representation, including its to_string overload.
using Fact = std::variant<Literal, ModalLiteral>;

using SuperiorityPair = std::pair<std::string, std::string>;  // winner > loser
using ModalityPair = std::pair<Modality, Modality>;

struct ArgTheory {
  std::vector<Literal> facts;
  std::vector<Rule> rules;
  std::vector<SuperiorityPair> superiority;

  friend bool operator==(const ArgTheory&, const ArgTheory&) = default;
};

std::vector<ModalityPair> default_conversions();  // Cv = {(BEL,OBL),(BEL,INT)}
std::vector<ModalityPair> default_conflicts();    // Cf = {(BEL,OBL),(BEL,INT),(OBL,INT)}

struct AgentTheory {
  std::vector<Fact> facts;
  std::vector<Rule> rules;
  std::vector<SuperiorityPair> superiority;
  std::vector<ModalityPair> conversions = default_conversions();
  std::vector<ModalityPair> conflicts = default_conflicts();

  bool has_default_relations() const;

  friend bool operator==(const AgentTheory&, const AgentTheory&) = default;
};

struct Violation {
  std::string code;     // e.g. "irreflexive", "acyclic", "dangling-label"
  std::string message;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Report-based validation; an empty report means the theory is well formed.
std::vector<Violation> validate_theory(const ArgTheory& t);
std::vector<Violation> validate_theory(const AgentTheory& t);

// |facts| + sum over rules of (1 + |antecedents|) + |superiority|.
std::size_t theory_size(const ArgTheory& t);
std::size_t theory_size(const AgentTheory& t);

}  // namespace dfl
