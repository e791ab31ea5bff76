#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>

namespace dfl {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Propositional literal: atom with classical negation. Atoms are case-sensitive
// identifiers over [A-Za-z0-9_].
struct Literal {
  std::string atom;
  bool negated = false;

  friend bool operator==(const Literal&, const Literal&) = default;
  friend auto operator<=>(const Literal&, const Literal&) = default;
};

inline Literal lit(std::string atom, bool negated = false) {
  return Literal{std::move(atom), negated};
}

Literal complement(const Literal& q);
std::string to_string(const Literal& q);  // "p" / "~p"
bool valid_atom(std::string_view atom);

enum class Modality : std::uint8_t { BEL = 0, OBL = 1, INT = 2 };

std::string_view to_string(Modality m);

// Modal literal Xq or ¬Xq. The modality is OBL or INT; beliefs are bare
// literals by convention.
struct ModalLiteral {
  bool outer_negated = false;
  Modality modality = Modality::OBL;
  Literal literal;

  friend bool operator==(const ModalLiteral&, const ModalLiteral&) = default;
  friend auto operator<=>(const ModalLiteral&, const ModalLiteral&) = default;
};

// X q -> X ~q: flips the inner literal, keeps modality and outer negation.
ModalLiteral complement(const ModalLiteral& q);
std::string to_string(const ModalLiteral& q);  // "OBL q" / "!OBL ~q"

// Rule body element: a plain literal or a modal literal.
using Antecedent = std::variant<Literal, ModalLiteral>;

std::string to_string(const Antecedent& a);

}  // namespace dfl
