#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "dfl/theory.hpp"

namespace dfl {

enum class Status : std::uint8_t { Undetermined, Proved, Rejected };

char status_char(Status s);  // '?', '+', '-'

struct LiteralTags {
  Status delta = Status::Undetermined;
  Status partial = Status::Undetermined;

  friend bool operator==(const LiteralTags&, const LiteralTags&) = default;
};

struct Extension {
  std::map<Literal, LiteralTags> entries;
  std::vector<std::string> warnings;  // strict contradictions (+d p and +d ~p)

  bool consistent() const { return warnings.empty(); }
  // Literals absent from the map have no rules and are not facts, hence -D/-d.
  LiteralTags at(const Literal& q) const;
};

// +Delta q: sign=+, definite=true, and so on.
struct ProofTag {
  bool positive = true;
  bool definite = false;

  friend bool operator==(const ProofTag&, const ProofTag&) = default;
};

std::string to_string(ProofTag tag);

struct TraceLine {
  ProofTag tag;
  std::optional<Modality> modality;     // set by the agent-logic prover
  Literal literal;
  std::string clause;                   // which proof condition fired
  std::vector<std::string> rule_labels; // rules involved
  std::vector<std::size_t> premises;    // indices of earlier lines
};

struct DerivationTrace {
  std::vector<TraceLine> lines;
};

enum class Answer : std::uint8_t { Yes, No, Undetermined };

struct ProveResult {
  Answer answer = Answer::Undetermined;
  DerivationTrace trace;  // populated on Yes
};

// Compiled form of a theory supporting extension computation over subsets of
// the rule set (used by the dialogue game and the move search).
class ExtensionSolver {
 public:
  explicit ExtensionSolver(const ArgTheory& theory);

  std::size_t rule_count() const;
  // Index of a rule label in the mask order (theory rule order); -1 if unknown.
  int rule_index(const std::string& label) const;

  Extension compute(const std::vector<char>& active_rules) const;
  Extension compute_all() const;

  // Fast path: partial statuses of a goal literal and its complement.
  std::pair<Status, Status> goal_partial(const std::vector<char>& active_rules,
                                         const Literal& goal) const;

  struct Impl;

 private:
  std::shared_ptr<const Impl> impl_;
};

// Delta level only; partial statuses are left undetermined.
Extension compute_definite(const ArgTheory& t);
Extension compute_extension(const ArgTheory& t);

// Applicability in the +-d sense against a (partial) extension.
bool is_applicable(const Rule& r, const Extension& partial);
bool is_discarded(const Rule& r, const Extension& partial);

ProveResult prove(const ArgTheory& t, ProofTag tag, const Literal& q);

}  // namespace dfl
