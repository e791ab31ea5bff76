#include "dfl/literal.hpp"

namespace dfl {

Literal complement(const Literal& q) { return Literal{q.atom, !q.negated}; }

std::string to_string(const Literal& q) {
  return q.negated ? "~" + q.atom : q.atom;
}

bool valid_atom(std::string_view atom) {
  if (atom.empty()) return false;
  for (char c : atom) {
    bool ok = (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') ||
              (c >= '0' && c <= '9') || c == '_';
    if (!ok) return false;
  }
  return true;
}

std::string_view to_string(Modality m) {
  switch (m) {
    case Modality::BEL: return "BEL";
    case Modality::OBL: return "OBL";
    case Modality::INT: return "INT";
  }
  return "?";
}

ModalLiteral complement(const ModalLiteral& q) {
  return ModalLiteral{q.outer_negated, q.modality, complement(q.literal)};
}

std::string to_string(const ModalLiteral& q) {
  std::string out;
  if (q.outer_negated) out += "!";
  out += to_string(q.modality);
  out += " ";
  out += to_string(q.literal);
  return out;
}

std::string to_string(const Antecedent& a) {
  if (const auto* l = std::get_if<Literal>(&a)) return to_string(*l);
  return to_string(std::get<ModalLiteral>(a));
}

}  // namespace dfl
