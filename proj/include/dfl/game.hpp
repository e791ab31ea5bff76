#pragma once

#include <functional>
#include <string>
#include <vector>

#include "dfl/engine.hpp"
#include "dfl/theory.hpp"

namespace dfl {

enum class Player : std::uint8_t { Proponent, Opponent };
enum class WinMode : std::uint8_t { Strong, Weak };
enum class GameStatus : std::uint8_t { Running, WonByProponent, WonByOpponent };

Player other(Player p);
std::string_view to_string(Player p);
std::string_view to_string(WinMode m);
std::string_view to_string(GameStatus s);

struct GameConfig {
  Literal goal;                  // the critical literal
  WinMode win_mode = WinMode::Strong;
  int max_turns = 0;             // 0: default |R_Pr| + |R_Op| + 1

  friend bool operator==(const GameConfig&, const GameConfig&) = default;
};

// The initial partition of the argumentation theory between the players.
struct GameParts {
  std::vector<Literal> facts;
  std::vector<Rule> common;
  std::vector<Rule> pr_private;
  std::vector<Rule> op_private;
  std::vector<SuperiorityPair> superiority;

  ArgTheory combined() const;

  friend bool operator==(const GameParts&, const GameParts&) = default;
};

struct Move {
  enum class Kind : std::uint8_t { Play, Pass } kind = Kind::Pass;
  std::vector<std::string> labels;  // for Play

  static Move pass() { return Move{Kind::Pass, {}}; }
  static Move play(std::vector<std::string> labels) {
    return Move{Kind::Play, std::move(labels)};
  }
  bool is_pass() const { return kind == Kind::Pass; }

  friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);

struct GameState {
  std::vector<Literal> facts;
  std::vector<Rule> common_rules;
  std::vector<Rule> pr_private;
  std::vector<Rule> op_private;
  std::vector<SuperiorityPair> superiority;
  GameConfig config;
  int turn = 0;
  Player to_move = Player::Proponent;
  GameStatus status = GameStatus::Running;
  std::vector<std::pair<Player, Move>> history;
  std::vector<std::string> warnings;

  ArgTheory common_theory() const;  // (F, R_Com, >) at the current turn
  const std::vector<Rule>& private_of(Player p) const;

  friend bool operator==(const GameState&, const GameState&) = default;
};

// Throws on an invalid, incoherent or inconsistent combined theory.
GameState new_game(const GameParts& parts, const GameConfig& config);

struct LegalCheck {
  bool ok = false;
  std::string reason;
};

LegalCheck legal(const GameState& state, const Move& move);
GameState apply_move(const GameState& state, const Move& move);  // throws if illegal

struct TranscriptMove {
  int turn = 0;
  Player player = Player::Proponent;
  Move move;
  Status goal_partial = Status::Undetermined;
  Status complement_partial = Status::Undetermined;
  bool forfeit = false;
};

struct Transcript {
  GameConfig config;
  std::vector<TranscriptMove> moves;
  GameStatus result = GameStatus::Running;
  bool aborted = false;  // max_turns safeguard tripped
};

using Strategy = std::function<Move(const GameState&)>;

Transcript run_game(const GameParts& parts, const GameConfig& config, const Strategy& pr,
                    const Strategy& op);

// Re-applies a transcript's moves from the initial state.
GameState replay(const GameParts& parts, const GameConfig& config, const Transcript& t);

}  // namespace dfl
