#include "dfl/game.hpp"

#include <algorithm>
#include <set>

namespace dfl {

Player other(Player p) {
  return p == Player::Proponent ? Player::Opponent : Player::Proponent;
}

std::string_view to_string(Player p) { return p == Player::Proponent ? "Pr" : "Op"; }
std::string_view to_string(WinMode m) { return m == WinMode::Strong ? "strong" : "weak"; }

std::string_view to_string(GameStatus s) {
  switch (s) {
    case GameStatus::Running: return "running";
    case GameStatus::WonByProponent: return "won_by_Pr";
    case GameStatus::WonByOpponent: return "won_by_Op";
  }
  return "?";
}

std::string to_string(const Move& m) {
  if (m.is_pass()) return "pass";
  std::string out = "{";
  for (std::size_t i = 0; i < m.labels.size(); ++i) {
    if (i) out += ", ";
    out += m.labels[i];
  }
  return out + "}";
}

ArgTheory GameParts::combined() const {
  ArgTheory t;
  t.facts = facts;
  t.rules = common;
  t.rules.insert(t.rules.end(), pr_private.begin(), pr_private.end());
  t.rules.insert(t.rules.end(), op_private.begin(), op_private.end());
  t.superiority = superiority;
  return t;
}

ArgTheory GameState::common_theory() const {
  ArgTheory t;
  t.facts = facts;
  t.rules = common_rules;
  // The superiority relation is common knowledge; pairs naming still-private
  // rules are inert until those rules are played.
  std::set<std::string> known;
  for (const Rule& r : common_rules) known.insert(r.label);
  for (const auto& p : superiority)
    if (known.count(p.first) && known.count(p.second)) t.superiority.push_back(p);
  return t;
}

const std::vector<Rule>& GameState::private_of(Player p) const {
  return p == Player::Proponent ? pr_private : op_private;
}

namespace {

bool objective_met(const ArgTheory& theory, const GameConfig& config, Player player) {
  Extension ext = compute_extension(theory);
  if (player == Player::Proponent) return ext.at(config.goal).partial == Status::Proved;
  if (config.win_mode == WinMode::Strong)
    return ext.at(complement(config.goal)).partial == Status::Proved;
  return ext.at(config.goal).partial == Status::Rejected;
}

}  // namespace

GameState new_game(const GameParts& parts, const GameConfig& config) {
  ArgTheory combined = parts.combined();
  auto violations = validate_theory(combined);
  if (!violations.empty())
    throw Error("invalid game theory: " + violations.front().message);
  Extension ext = compute_extension(combined);
  if (!ext.consistent())
    throw Error("inconsistent game theory: " + ext.warnings.front());

  GameState state;
  state.facts = parts.facts;
  state.common_rules = parts.common;
  state.pr_private = parts.pr_private;
  state.op_private = parts.op_private;
  state.superiority = parts.superiority;
  state.config = config;
  if (state.config.max_turns <= 0)
    state.config.max_turns = (int)(parts.pr_private.size() + parts.op_private.size()) + 1;
  if (ext.entries.find(config.goal) == ext.entries.end())
    state.warnings.push_back("goal literal " + to_string(config.goal) +
                             " is not mentioned in the theory");

  Extension initial = compute_extension(state.common_theory());
  state.to_move = initial.at(config.goal).partial == Status::Proved ? Player::Opponent
                                                                    : Player::Proponent;
  return state;
}

LegalCheck legal(const GameState& state, const Move& move) {
  if (state.status != GameStatus::Running) return {false, "game is over"};
  if (move.is_pass()) return {true, ""};
  if (move.labels.empty()) return {false, "a play must put forward at least one rule"};
  std::set<std::string> seen;
  const auto& priv = state.private_of(state.to_move);
  for (const auto& label : move.labels) {
    if (!seen.insert(label).second) return {false, "rule '" + label + "' listed twice"};
    bool mine = std::any_of(priv.begin(), priv.end(),
                            [&](const Rule& r) { return r.label == label; });
    if (!mine)
      return {false, "rule '" + label + "' is not among the mover's private rules"};
  }
  // The post-move common theory must establish the mover's objective.
  GameState after = state;
  auto& from = after.to_move == Player::Proponent ? after.pr_private : after.op_private;
  for (const auto& label : move.labels) {
    auto it = std::find_if(from.begin(), from.end(),
                           [&](const Rule& r) { return r.label == label; });
    after.common_rules.push_back(*it);
    from.erase(it);
  }
  if (!objective_met(after.common_theory(), state.config, state.to_move)) {
    const char* goal = state.to_move == Player::Proponent
                           ? "the goal defeasibly provable"
                           : (state.config.win_mode == WinMode::Strong
                                  ? "the goal's complement defeasibly provable"
                                  : "the goal defeasibly rejected");
    return {false, std::string("move does not make ") + goal};
  }
  return {true, ""};
}

GameState apply_move(const GameState& state, const Move& move) {
  LegalCheck check = legal(state, move);
  if (!check.ok) throw Error("illegal move: " + check.reason);
  GameState next = state;
  next.history.emplace_back(state.to_move, move);
  next.turn += 1;
  if (move.is_pass()) {
    next.status = state.to_move == Player::Proponent ? GameStatus::WonByOpponent
                                                     : GameStatus::WonByProponent;
    return next;
  }
  auto& from = state.to_move == Player::Proponent ? next.pr_private : next.op_private;
  for (const auto& label : move.labels) {
    auto it = std::find_if(from.begin(), from.end(),
                           [&](const Rule& r) { return r.label == label; });
    next.common_rules.push_back(*it);
    from.erase(it);
  }
  next.to_move = other(state.to_move);
  return next;
}

Transcript run_game(const GameParts& parts, const GameConfig& config, const Strategy& pr,
                    const Strategy& op) {
  GameState state = new_game(parts, config);
  Transcript transcript;
  transcript.config = state.config;
  while (state.status == GameStatus::Running) {
    if ((int)state.history.size() >= state.config.max_turns) {
      transcript.aborted = true;
      break;
    }
    Player mover = state.to_move;
    Move move = mover == Player::Proponent ? pr(state) : op(state);
    TranscriptMove record;
    record.turn = state.turn + 1;
    record.player = mover;
    record.move = move;
    LegalCheck check = legal(state, move);
    if (!check.ok) {
      record.forfeit = true;
      Extension ext = compute_extension(state.common_theory());
      record.goal_partial = ext.at(config.goal).partial;
      record.complement_partial = ext.at(complement(config.goal)).partial;
      transcript.moves.push_back(std::move(record));
      state.status = mover == Player::Proponent ? GameStatus::WonByOpponent
                                                : GameStatus::WonByProponent;
      break;
    }
    state = apply_move(state, move);
    Extension ext = compute_extension(state.common_theory());
    record.goal_partial = ext.at(config.goal).partial;
    record.complement_partial = ext.at(complement(config.goal)).partial;
    transcript.moves.push_back(std::move(record));
  }
  transcript.result = state.status;
  return transcript;
}

GameState replay(const GameParts& parts, const GameConfig& config, const Transcript& t) {
  GameState state = new_game(parts, config);
  for (const TranscriptMove& m : t.moves) {
    if (m.forfeit) break;
    state = apply_move(state, m.move);
  }
  return state;
}

}  // namespace dfl
