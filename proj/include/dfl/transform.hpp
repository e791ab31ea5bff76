#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dfl/theory.hpp"

namespace dfl {

// Flattening of the agent language into plain literals. Inner negation of a
// flattened literal is carried by the classical negation flag, so the standard
// complement pairs obl_p with ~obl_p exactly as the redefined complement pairs
// the obl_ images of p and ~p. Outer negation of a modal antecedent maps to a
// fresh positive witness atom (not_obl_p family) driven by the guard rules the
// transformation emits.

Literal pflat(const Literal& q);
Literal flat(Modality m, const Literal& q);  // BEL yields pflat(q)
Literal flat(const Antecedent& a);
Literal flat_complement(const Literal& q);   // throws on literals outside the image

struct TransformResult {
  ArgTheory theory;
  // source item (rule label, or "fact <f>") -> generated rule label
  std::vector<std::pair<std::string, std::string>> provenance;
  // condition-(2) strict rules standing for the primitive intentions, in fact order
  std::vector<std::string> intention_rule_labels;
};

// The agent-theory -> argumentation-theory translation; requires the default
// conversion and conflict relations and a collision-free naming space.
TransformResult transform_theory(const AgentTheory& t);

}  // namespace dfl
