#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>

#include "dfl/bio.hpp"
#include "dfl/game.hpp"
#include "dfl/transform.hpp"

namespace dfl {

enum class SearchOrder : std::uint8_t { MinimalFirst, MaximalFirst };

struct SearchOptions {
  SearchOrder order = SearchOrder::MinimalFirst;
  bool use_pruning = true;
  // Extra acceptance predicate over a winning subset (labels, sorted as tried).
  std::function<bool(const std::vector<std::string>&)> filter;
};

struct MoveSearchResult {
  bool found = false;
  std::vector<std::string> witness;
  std::uint64_t nodes_explored = 0;
  std::chrono::duration<double> elapsed{0};
};

// Exact decision of the move-selection problem for the player to move:
// is there a subset of their private rules whose publication establishes
// their objective? Enumeration is size-ordered and pruned to the rules whose
// head atom can reach the goal atom.
MoveSearchResult find_winning_move(const GameState& state, Player player,
                                   const SearchOptions& options = {});

// Plain 2^n enumeration over the unpruned private rules; the reference
// implementation the pruned search is checked against.
MoveSearchResult oracle_winning_move(const GameState& state, Player player);

Strategy strategy_minimal();
Strategy strategy_maximal();
Strategy strategy_exhaustive();
std::optional<Strategy> strategy_by_name(const std::string& name);

struct SocialityInstance {
  AgentTheory theory;
  std::vector<Literal> primitive_intentions;  // I: the INT facts, in fact order
  Literal primary_obligation;                 // p in OBL p
};

SocialityInstance make_sociality_instance(const AgentTheory& theory,
                                          const Literal& obligation);

struct InstanceCondition {
  std::string name;
  Status status = Status::Undetermined;
  bool holds = false;
};

struct InstanceReport {
  std::vector<InstanceCondition> conditions;
  bool conditions_hold = false;
  bool well_posed = false;  // conditions hold and I is non-empty
};

InstanceReport check_sociality_instance(const SocialityInstance& instance);

struct SocialityResult {
  bool found = false;
  std::vector<Literal> kept_intentions;  // maximal I' when found
  std::uint64_t nodes_explored = 0;
};

// Exhaustive search over proper subsets I' of I, largest first; accepts when
// the reduced theory restores +d_OBL p while preserving every positive
// obligation of the original theory.
SocialityResult solve_restoring_sociality(const SocialityInstance& instance);

struct ReducedGame {
  GameParts parts;
  GameConfig config;
  // r_q rule label <-> the primitive intention it stands for
  std::vector<std::pair<std::string, Literal>> intention_labels;
};

ReducedGame reduce_sociality_to_game(const SocialityInstance& instance);

// Runs the maximal-first move search on the reduced game, optionally filtering
// winning subsets by the obligation-preservation side condition. An empty
// witness reports the case where the common theory alone proves the goal
// (dropping every primitive intention).
MoveSearchResult solve_via_game(const SocialityInstance& instance,
                                bool filter_obligations = true);

}  // namespace dfl
