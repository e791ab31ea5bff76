#pragma once

#include <map>

#include "dfl/engine.hpp"
#include "dfl/theory.hpp"

namespace dfl {

struct ModalTags {
  Status delta = Status::Undetermined;
  Status partial = Status::Undetermined;
  Status support = Status::Undetermined;  // Proved = supported, Rejected = unsupported

  friend bool operator==(const ModalTags&, const ModalTags&) = default;
};

struct ModalExtension {
  std::map<std::pair<Modality, Literal>, ModalTags> entries;
  std::vector<std::string> warnings;

  bool consistent() const { return warnings.empty(); }
  // Unmentioned literals have no rules and are not facts: rejected/unsupported.
  ModalTags at(Modality m, const Literal& q) const;
};

ModalExtension compute_bio_extension(const AgentTheory& t);

// Sigma-support for mode X: some rule usable for X (same mode, or via Cv) is
// applicable in the d_X sense.
Status support(const AgentTheory& t, Modality m, const Literal& q);

ProveResult bio_prove(const AgentTheory& t, ProofTag tag, Modality m, const Literal& q);
// Query form for modal literals; outer negation is answered via the
// complementary tag on the stripped literal.
ProveResult bio_prove(const AgentTheory& t, ProofTag tag, const ModalLiteral& query);

}  // namespace dfl
