#pragma once

#include <string_view>
#include <variant>

#include "dfl/game.hpp"
#include "dfl/theory.hpp"

namespace dfl {

struct SourceSpan {
  int line = 0;
  int column = 0;
};

struct ParseError : Error {
  SourceSpan span;
  ParseError(const std::string& message, SourceSpan where)
      : Error(message + " at line " + std::to_string(where.line) + ", column " +
              std::to_string(where.column)),
        span(where) {}
};

// A document is an AgentTheory iff any MODE token appears.
using ParsedTheory = std::variant<ArgTheory, AgentTheory>;

ParsedTheory parse_theory(std::string_view text);

struct GameDocument {
  GameParts parts;
  GameConfig config;
};

// Theory grammar extended with goal/mode statements and @section markers;
// game rules are modeless.
GameDocument parse_game(std::string_view text);

}  // namespace dfl
