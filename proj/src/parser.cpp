#include "dfl/parser.hpp"

#include <optional>
#include <set>

namespace dfl {

namespace {

enum class Tok : std::uint8_t {
  Ident, Dot, Comma, Colon, Gt, Tilde, Bang, LBracket, RBracket,
  ArrowStrict, ArrowDefeasible, ArrowDefeater, Section, End,
};

struct Token {
  Tok kind = Tok::End;
  std::string text;
  SourceSpan span;
};

struct Lexer {
  std::string_view src;
  std::size_t pos = 0;
  int line = 1, col = 1;

  SourceSpan here() const { return {line, col}; }

  void advance(std::size_t n = 1) {
    for (std::size_t i = 0; i < n && pos < src.size(); ++i, ++pos) {
      if (src[pos] == '\n') { ++line; col = 1; }
      else ++col;
    }
  }

  static bool ident_char(char c) {
    return (c >= 'A' && c <= 'Z') || (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') ||
           c == '_';
  }

  Token next() {
    while (pos < src.size()) {
      char c = src[pos];
      if (c == ' ' || c == '\t' || c == '\r' || c == '\n') { advance(); continue; }
      if (c == '#') {
        while (pos < src.size() && src[pos] != '\n') advance();
        continue;
      }
      break;
    }
    Token t;
    t.span = here();
    if (pos >= src.size()) return t;
    char c = src[pos];
    auto two = [&](Tok kind) {
      t.kind = kind;
      t.text = std::string(src.substr(pos, 2));
      advance(2);
      return t;
    };
    auto one = [&](Tok kind) {
      t.kind = kind;
      t.text = std::string(1, c);
      advance();
      return t;
    };
    switch (c) {
      case '.': return one(Tok::Dot);
      case ',': return one(Tok::Comma);
      case ':': return one(Tok::Colon);
      case '>': return one(Tok::Gt);
      case '!': return one(Tok::Bang);
      case '[': return one(Tok::LBracket);
      case ']': return one(Tok::RBracket);
      case '~':
        if (pos + 1 < src.size() && src[pos + 1] == '>') return two(Tok::ArrowDefeater);
        return one(Tok::Tilde);
      case '-':
        if (pos + 1 < src.size() && src[pos + 1] == '>') return two(Tok::ArrowStrict);
        throw ParseError("unexpected '-'", t.span);
      case '=':
        if (pos + 1 < src.size() && src[pos + 1] == '>') return two(Tok::ArrowDefeasible);
        throw ParseError("unexpected '='", t.span);
      case '@': {
        advance();
        std::string word;
        while (pos < src.size() && ident_char(src[pos])) {
          word += src[pos];
          advance();
        }
        t.kind = Tok::Section;
        t.text = word;
        return t;
      }
      default: break;
    }
    if (ident_char(c)) {
      std::string word;
      while (pos < src.size() && ident_char(src[pos])) {
        word += src[pos];
        advance();
      }
      t.kind = Tok::Ident;
      t.text = word;
      return t;
    }
    throw ParseError(std::string("unexpected character '") + c + "'", t.span);
  }
};

std::optional<Modality> modality_of(const std::string& word) {
  if (word == "BEL") return Modality::BEL;
  if (word == "OBL") return Modality::OBL;
  if (word == "INT") return Modality::INT;
  return std::nullopt;
}

struct Parser {
  Lexer lexer;
  Token tok;
  bool modal_seen = false;

  explicit Parser(std::string_view text) : lexer{text} { tok = lexer.next(); }

  void bump() { tok = lexer.next(); }

  void expect(Tok kind, const char* what) {
    if (tok.kind != kind) throw ParseError(std::string("expected ") + what, tok.span);
    bump();
  }

  std::string ident(const char* what) {
    if (tok.kind != Tok::Ident) throw ParseError(std::string("expected ") + what, tok.span);
    std::string word = tok.text;
    bump();
    return word;
  }

  Literal literal() {
    bool neg = false;
    if (tok.kind == Tok::Tilde) {
      neg = true;
      bump();
    }
    SourceSpan span = tok.span;
    std::string atom = ident("an atom");
    if (modality_of(atom))
      throw ParseError("modal operator '" + atom + "' cannot be used as an atom", span);
    return Literal{atom, neg};
  }

  // lit | MODE lit | "!" MODE lit
  Antecedent antecedent() {
    if (tok.kind == Tok::Bang) {
      SourceSpan span = tok.span;
      bump();
      auto mode = modality_of(tok.text);
      if (tok.kind != Tok::Ident || !mode)
        throw ParseError("expected a modal operator after '!'", tok.span);
      if (*mode == Modality::BEL)
        throw ParseError("BEL does not form modal literals; write the bare literal", span);
      bump();
      modal_seen = true;
      return ModalLiteral{true, *mode, literal()};
    }
    if (tok.kind == Tok::Ident) {
      if (auto mode = modality_of(tok.text)) {
        SourceSpan span = tok.span;
        bump();
        if (*mode == Modality::BEL)
          throw ParseError("BEL does not form modal literals; write the bare literal", span);
        modal_seen = true;
        return ModalLiteral{false, *mode, literal()};
      }
    }
    return literal();
  }

  struct Statement {
    enum class Kind { Fact, Rule, Sup, Goal, Mode, Section } kind;
    Fact fact{Literal{}};
    Rule rule;
    SuperiorityPair sup;
    Literal goal;
    WinMode mode = WinMode::Strong;
    std::string section;
    SourceSpan span;
  };

  std::optional<Statement> statement(bool game_dialect) {
    if (tok.kind == Tok::End) return std::nullopt;
    Statement st;
    st.span = tok.span;
    if (tok.kind == Tok::Section) {
      if (!game_dialect) throw ParseError("section markers belong to game files", tok.span);
      if (tok.text != "common" && tok.text != "proponent" && tok.text != "opponent")
        throw ParseError("unknown section '@" + tok.text + "'", tok.span);
      st.kind = Statement::Kind::Section;
      st.section = tok.text;
      bump();
      return st;
    }
    SourceSpan head_span = tok.span;
    std::string head = ident("a statement");
    if (head == "fact") {
      st.kind = Statement::Kind::Fact;
      if (tok.kind == Tok::Ident) {
        if (auto mode = modality_of(tok.text)) {
          if (*mode == Modality::BEL)
            throw ParseError("belief facts are written as bare literals", tok.span);
          bump();
          modal_seen = true;
          st.fact = ModalLiteral{false, *mode, literal()};
          expect(Tok::Dot, "'.'");
          return st;
        }
      }
      st.fact = literal();
      expect(Tok::Dot, "'.'");
      return st;
    }
    if (head == "rule") {
      st.kind = Statement::Kind::Rule;
      st.rule.label = ident("a rule label");
      if (tok.kind == Tok::LBracket) {
        bump();
        SourceSpan span = tok.span;
        auto mode = modality_of(ident("a modal operator"));
        if (!mode) throw ParseError("expected BEL, OBL or INT", span);
        st.rule.mode = *mode;
        modal_seen = true;
        expect(Tok::RBracket, "']'");
      }
      expect(Tok::Colon, "':'");
      std::vector<Antecedent> ants;
      if (tok.kind != Tok::ArrowStrict && tok.kind != Tok::ArrowDefeasible &&
          tok.kind != Tok::ArrowDefeater) {
        ants.push_back(antecedent());
        while (tok.kind == Tok::Comma) {
          bump();
          ants.push_back(antecedent());
        }
      }
      RuleKind kind;
      if (tok.kind == Tok::ArrowStrict) kind = RuleKind::Strict;
      else if (tok.kind == Tok::ArrowDefeasible) kind = RuleKind::Defeasible;
      else if (tok.kind == Tok::ArrowDefeater) kind = RuleKind::Defeater;
      else throw ParseError("expected '->', '=>' or '~>'", tok.span);
      bump();
      Literal head_lit = literal();
      expect(Tok::Dot, "'.'");
      st.rule = st.rule.mode
                    ? make_rule(st.rule.label, kind, *st.rule.mode, std::move(ants), head_lit)
                    : make_rule(st.rule.label, kind, std::move(ants), head_lit);
      return st;
    }
    if (head == "sup") {
      st.kind = Statement::Kind::Sup;
      st.sup.first = ident("a rule label");
      expect(Tok::Gt, "'>'");
      st.sup.second = ident("a rule label");
      expect(Tok::Dot, "'.'");
      return st;
    }
    if (game_dialect && head == "goal") {
      st.kind = Statement::Kind::Goal;
      st.goal = literal();
      expect(Tok::Dot, "'.'");
      return st;
    }
    if (game_dialect && head == "mode") {
      st.kind = Statement::Kind::Mode;
      SourceSpan span = tok.span;
      std::string word = ident("'strong' or 'weak'");
      if (word == "strong") st.mode = WinMode::Strong;
      else if (word == "weak") st.mode = WinMode::Weak;
      else throw ParseError("expected 'strong' or 'weak'", span);
      expect(Tok::Dot, "'.'");
      return st;
    }
    throw ParseError("unknown statement '" + head + "'", head_span);
  }
};

}  // namespace

ParsedTheory parse_theory(std::string_view text) {
  Parser parser(text);
  std::vector<Parser::Statement> statements;
  while (auto st = parser.statement(false)) statements.push_back(std::move(*st));

  if (parser.modal_seen) {
    AgentTheory t;
    for (auto& st : statements) {
      switch (st.kind) {
        case Parser::Statement::Kind::Fact: t.facts.push_back(st.fact); break;
        case Parser::Statement::Kind::Rule:
          if (!st.rule.mode)
            throw ParseError("rule '" + st.rule.label + "' lacks a mode in an agent theory",
                             st.span);
          t.rules.push_back(std::move(st.rule));
          break;
        case Parser::Statement::Kind::Sup: t.superiority.push_back(std::move(st.sup)); break;
        default: break;
      }
    }
    return t;
  }
  ArgTheory t;
  for (auto& st : statements) {
    switch (st.kind) {
      case Parser::Statement::Kind::Fact: t.facts.push_back(std::get<Literal>(st.fact)); break;
      case Parser::Statement::Kind::Rule: t.rules.push_back(std::move(st.rule)); break;
      case Parser::Statement::Kind::Sup: t.superiority.push_back(std::move(st.sup)); break;
      default: break;
    }
  }
  return t;
}

GameDocument parse_game(std::string_view text) {
  Parser parser(text);
  GameDocument doc;
  bool goal_seen = false;
  std::string section = "common";
  SourceSpan first{1, 1};
  while (auto st = parser.statement(true)) {
    switch (st->kind) {
      case Parser::Statement::Kind::Section: section = st->section; break;
      case Parser::Statement::Kind::Goal:
        if (goal_seen) throw ParseError("duplicate goal", st->span);
        goal_seen = true;
        doc.config.goal = st->goal;
        break;
      case Parser::Statement::Kind::Mode: doc.config.win_mode = st->mode; break;
      case Parser::Statement::Kind::Fact:
        if (!std::holds_alternative<Literal>(st->fact))
          throw ParseError("modal facts belong to agent theories", st->span);
        doc.parts.facts.push_back(std::get<Literal>(st->fact));
        break;
      case Parser::Statement::Kind::Rule:
        if (st->rule.mode)
          throw ParseError("game rules are modeless; found a mode on '" + st->rule.label + "'",
                           st->span);
        for (const Antecedent& a : st->rule.antecedents)
          if (std::holds_alternative<ModalLiteral>(a))
            throw ParseError("modal antecedents belong to agent theories", st->span);
        if (section == "common") doc.parts.common.push_back(std::move(st->rule));
        else if (section == "proponent") doc.parts.pr_private.push_back(std::move(st->rule));
        else doc.parts.op_private.push_back(std::move(st->rule));
        break;
      case Parser::Statement::Kind::Sup:
        doc.parts.superiority.push_back(std::move(st->sup));
        break;
    }
  }
  if (!goal_seen) throw ParseError("game file lacks a goal statement", first);
  return doc;
}

}  // namespace dfl
