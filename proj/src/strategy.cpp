#include "dfl/strategy.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace dfl {

namespace {

struct SubsetSearch {
  ExtensionSolver solver;
  std::vector<char> base_mask;            // common rules on, everything else off
  std::vector<std::pair<std::string, int>> candidates;  // label -> solver index
  Literal goal;
  WinMode win_mode;
  Player player;

  SubsetSearch(const GameState& state, Player who, bool prune)
      : solver(combined_theory(state)),
        goal(state.config.goal),
        win_mode(state.config.win_mode),
        player(who) {
    base_mask.assign(solver.rule_count(), 0);
    for (const Rule& r : state.common_rules) base_mask[solver.rule_index(r.label)] = 1;
    std::set<std::string> cone;
    if (prune) cone = goal_cone(state, who);
    for (const Rule& r : state.private_of(who)) {
      if (prune && !cone.count(r.label)) continue;
      candidates.emplace_back(r.label, solver.rule_index(r.label));
    }
    std::sort(candidates.begin(), candidates.end());
  }

  static ArgTheory combined_theory(const GameState& state) {
    ArgTheory t;
    t.facts = state.facts;
    t.rules = state.common_rules;
    t.rules.insert(t.rules.end(), state.pr_private.begin(), state.pr_private.end());
    t.rules.insert(t.rules.end(), state.op_private.begin(), state.op_private.end());
    t.superiority = state.superiority;
    return t;
  }

  // Labels of the mover's private rules whose head atom can reach the goal
  // atom in the antecedent->head graph over all rules of the game. Rules
  // outside the cone cannot influence the goal's status at any future turn.
  static std::set<std::string> goal_cone(const GameState& state, Player who) {
    std::vector<const Rule*> rules;
    for (const Rule& r : state.common_rules) rules.push_back(&r);
    for (const Rule& r : state.pr_private) rules.push_back(&r);
    for (const Rule& r : state.op_private) rules.push_back(&r);
    std::map<std::string, std::vector<std::string>> into;  // head atom -> ant atoms
    for (const Rule* r : rules) {
      auto& v = into[r->consequent.atom];
      for (const Antecedent& a : r->antecedents)
        v.push_back(std::get<Literal>(a).atom);
    }
    std::set<std::string> reaches{state.config.goal.atom};
    std::vector<std::string> queue{state.config.goal.atom};
    while (!queue.empty()) {
      std::string atom = queue.back();
      queue.pop_back();
      for (const auto& src : into[atom])
        if (reaches.insert(src).second) queue.push_back(src);
    }
    std::set<std::string> cone;
    for (const Rule& r : state.private_of(who))
      if (reaches.count(r.consequent.atom)) cone.insert(r.label);
    return cone;
  }

  bool objective(const std::vector<char>& mask) const {
    auto [goal_status, comp_status] = solver.goal_partial(mask, goal);
    if (player == Player::Proponent) return goal_status == Status::Proved;
    if (win_mode == WinMode::Strong) return comp_status == Status::Proved;
    return goal_status == Status::Rejected;
  }

  // Size-ordered enumeration; within a size, combinations follow the
  // lexicographic order of the sorted candidate labels.
  MoveSearchResult run(SearchOrder order,
                       const std::function<bool(const std::vector<std::string>&)>& filter) {
    auto start = std::chrono::steady_clock::now();
    MoveSearchResult result;
    int n = (int)candidates.size();
    std::vector<int> sizes;
    for (int k = 1; k <= n; ++k) sizes.push_back(k);
    if (order == SearchOrder::MaximalFirst) std::reverse(sizes.begin(), sizes.end());
    std::vector<char> mask;
    std::vector<int> pick;
    for (int k : sizes) {
      pick.assign(k, 0);
      std::iota(pick.begin(), pick.end(), 0);
      while (true) {
        ++result.nodes_explored;
        mask = base_mask;
        for (int i : pick) mask[candidates[i].second] = 1;
        if (objective(mask)) {
          std::vector<std::string> labels;
          for (int i : pick) labels.push_back(candidates[i].first);
          if (!filter || filter(labels)) {
            result.found = true;
            result.witness = std::move(labels);
            result.elapsed = std::chrono::steady_clock::now() - start;
            return result;
          }
        }
        // next combination
        int i = k - 1;
        while (i >= 0 && pick[i] == n - k + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
    result.elapsed = std::chrono::steady_clock::now() - start;
    return result;
  }
};

}  // namespace

MoveSearchResult find_winning_move(const GameState& state, Player player,
                                   const SearchOptions& options) {
  if (state.status != GameStatus::Running) throw Error("game is not running");
  if (player != state.to_move) throw Error("it is not that player's turn");
  SubsetSearch search(state, player, options.use_pruning);
  return search.run(options.order, options.filter);
}

MoveSearchResult oracle_winning_move(const GameState& state, Player player) {
  if (state.status != GameStatus::Running) throw Error("game is not running");
  if (player != state.to_move) throw Error("it is not that player's turn");
  auto start = std::chrono::steady_clock::now();
  SubsetSearch search(state, player, false);
  MoveSearchResult result;
  int n = (int)search.candidates.size();
  std::vector<char> mask;
  for (std::uint64_t bits = 1; bits < (1ull << n); ++bits) {
    ++result.nodes_explored;
    mask = search.base_mask;
    for (int i = 0; i < n; ++i)
      if (bits & (1ull << i)) mask[search.candidates[i].second] = 1;
    if (search.objective(mask)) {
      result.found = true;
      for (int i = 0; i < n; ++i)
        if (bits & (1ull << i)) result.witness.push_back(search.candidates[i].first);
      break;
    }
  }
  result.elapsed = std::chrono::steady_clock::now() - start;
  return result;
}

namespace {

Strategy search_strategy(SearchOrder order, bool pruned) {
  return [order, pruned](const GameState& state) {
    MoveSearchResult r;
    if (pruned) {
      SearchOptions opt;
      opt.order = order;
      r = find_winning_move(state, state.to_move, opt);
    } else {
      r = oracle_winning_move(state, state.to_move);
    }
    return r.found ? Move::play(r.witness) : Move::pass();
  };
}

}  // namespace

Strategy strategy_minimal() { return search_strategy(SearchOrder::MinimalFirst, true); }
Strategy strategy_maximal() { return search_strategy(SearchOrder::MaximalFirst, true); }
Strategy strategy_exhaustive() { return search_strategy(SearchOrder::MinimalFirst, false); }

std::optional<Strategy> strategy_by_name(const std::string& name) {
  if (name == "minimal") return strategy_minimal();
  if (name == "maximal") return strategy_maximal();
  if (name == "exhaustive") return strategy_exhaustive();
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Restoring Sociality
// ---------------------------------------------------------------------------

SocialityInstance make_sociality_instance(const AgentTheory& theory,
                                          const Literal& obligation) {
  SocialityInstance inst;
  inst.theory = theory;
  inst.primary_obligation = obligation;
  for (const Fact& f : theory.facts) {
    const auto* m = std::get_if<ModalLiteral>(&f);
    if (m && m->modality == Modality::INT) inst.primitive_intentions.push_back(m->literal);
  }
  return inst;
}

InstanceReport check_sociality_instance(const SocialityInstance& instance) {
  ModalExtension ext = compute_bio_extension(instance.theory);
  const Literal& p = instance.primary_obligation;
  Literal np = complement(p);
  InstanceReport report;
  auto add = [&](std::string name, Status status, Status wanted) {
    report.conditions.push_back({std::move(name), status, status == wanted});
  };
  add("-d_OBL " + to_string(p), ext.at(Modality::OBL, p).partial, Status::Rejected);
  add("-S_OBL " + to_string(np), ext.at(Modality::OBL, np).support, Status::Rejected);
  add("+d_INT " + to_string(np), ext.at(Modality::INT, np).partial, Status::Proved);
  add("+S_OBL " + to_string(p), ext.at(Modality::OBL, p).support, Status::Proved);
  add("-S_BEL " + to_string(np), ext.at(Modality::BEL, np).support, Status::Rejected);
  report.conditions_hold = std::all_of(report.conditions.begin(), report.conditions.end(),
                                       [](const InstanceCondition& c) { return c.holds; });
  report.well_posed = report.conditions_hold && !instance.primitive_intentions.empty();
  return report;
}

namespace {

AgentTheory with_intentions(const AgentTheory& theory, const std::vector<Literal>& kept) {
  AgentTheory out = theory;
  out.facts.clear();
  for (const Fact& f : theory.facts) {
    const auto* m = std::get_if<ModalLiteral>(&f);
    if (m && m->modality == Modality::INT) {
      if (std::find(kept.begin(), kept.end(), m->literal) == kept.end()) continue;
    }
    out.facts.push_back(f);
  }
  return out;
}

std::vector<Literal> positive_obligations(const ModalExtension& ext) {
  std::vector<Literal> out;
  for (const auto& [key, tags] : ext.entries)
    if (key.first == Modality::OBL && tags.partial == Status::Proved)
      out.push_back(key.second);
  return out;
}

bool restores(const SocialityInstance& instance, const std::vector<Literal>& kept,
              const std::vector<Literal>& must_keep) {
  ModalExtension ext = compute_bio_extension(with_intentions(instance.theory, kept));
  if (ext.at(Modality::OBL, instance.primary_obligation).partial != Status::Proved)
    return false;
  for (const Literal& q : must_keep)
    if (ext.at(Modality::OBL, q).partial != Status::Proved) return false;
  return true;
}

}  // namespace

SocialityResult solve_restoring_sociality(const SocialityInstance& instance) {
  InstanceReport report = check_sociality_instance(instance);
  if (!report.well_posed) throw Error("ill-posed restoring-sociality instance");

  std::vector<Literal> intentions = instance.primitive_intentions;
  std::sort(intentions.begin(), intentions.end());
  intentions.erase(std::unique(intentions.begin(), intentions.end()), intentions.end());
  std::vector<Literal> must_keep =
      positive_obligations(compute_bio_extension(instance.theory));

  SocialityResult result;
  int n = (int)intentions.size();
  // proper subsets only, maximum cardinality first, lexicographically least
  // kept-set within a size
  for (int k = n - 1; k >= 0; --k) {
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ++result.nodes_explored;
      std::vector<Literal> kept;
      for (int i : pick) kept.push_back(intentions[i]);
      if (restores(instance, kept, must_keep)) {
        result.found = true;
        result.kept_intentions = std::move(kept);
        return result;
      }
      if (k == 0) break;
      int i = k - 1;
      while (i >= 0 && pick[i] == n - k + i) --i;
      if (i < 0) break;
      ++pick[i];
      for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return result;
}

ReducedGame reduce_sociality_to_game(const SocialityInstance& instance) {
  InstanceReport report = check_sociality_instance(instance);
  if (!report.well_posed) throw Error("ill-posed restoring-sociality instance");

  TransformResult tr = transform_theory(instance.theory);
  ReducedGame game;
  game.parts.facts = tr.theory.facts;
  game.parts.superiority = tr.theory.superiority;
  std::set<std::string> intention_labels(tr.intention_rule_labels.begin(),
                                         tr.intention_rule_labels.end());
  for (const Rule& r : tr.theory.rules) {
    if (intention_labels.count(r.label)) game.parts.pr_private.push_back(r);
    else game.parts.common.push_back(r);
  }
  for (const auto& [source, label] : tr.provenance) {
    if (!intention_labels.count(label)) continue;
    // source is "fact INT q"
    for (const Fact& f : instance.theory.facts) {
      const auto* m = std::get_if<ModalLiteral>(&f);
      if (m && m->modality == Modality::INT && "fact " + to_string(f) == source) {
        game.intention_labels.emplace_back(label, m->literal);
        break;
      }
    }
  }
  game.config.goal = flat(Modality::OBL, instance.primary_obligation);
  game.config.win_mode = WinMode::Strong;
  return game;
}

MoveSearchResult solve_via_game(const SocialityInstance& instance, bool filter_obligations) {
  ReducedGame reduced = reduce_sociality_to_game(instance);
  GameState state = new_game(reduced.parts, reduced.config);

  std::map<std::string, Literal> by_label(reduced.intention_labels.begin(),
                                          reduced.intention_labels.end());
  std::vector<Literal> must_keep =
      positive_obligations(compute_bio_extension(instance.theory));
  auto filter = [&](const std::vector<std::string>& labels) {
    if (!filter_obligations) return true;
    std::vector<Literal> kept;
    for (const auto& l : labels) kept.push_back(by_label.at(l));
    return restores(instance, kept, must_keep);
  };

  // The search is the Proponent's instance regardless of whose turn the
  // protocol would give; playing every r_q reproduces the deviant theory, so
  // the full set never wins and witnesses stay proper subsets of I.
  SubsetSearch search(state, Player::Proponent, true);
  MoveSearchResult result = search.run(SearchOrder::MaximalFirst, filter);
  if (!result.found && search.objective(search.base_mask) && filter({})) {
    result.found = true;
    result.witness.clear();
  }
  return result;
}

}  // namespace dfl
