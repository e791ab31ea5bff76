#include "dfl/engine.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <unordered_map>

namespace dfl {

char status_char(Status s) {
  switch (s) {
    case Status::Proved: return '+';
    case Status::Rejected: return '-';
    case Status::Undetermined: return '?';
  }
  return '?';
}

std::string to_string(ProofTag tag) {
  std::string out(1, tag.positive ? '+' : '-');
  out += tag.definite ? "D" : "d";
  return out;
}

LiteralTags Extension::at(const Literal& q) const {
  auto it = entries.find(q);
  if (it != entries.end()) return it->second;
  return LiteralTags{Status::Rejected, Status::Rejected};
}

// ---------------------------------------------------------------------------
// Compiled theory
// ---------------------------------------------------------------------------

struct ExtensionSolver::Impl {
  struct CRule {
    int head = 0;
    std::vector<int> ants;  // literal ids, deduplicated
    RuleKind kind = RuleKind::Defeasible;
    std::string label;
  };

  std::vector<std::string> atoms;
  std::map<std::string, int> atom_ids;
  std::vector<CRule> rules;
  std::vector<char> fact;                    // by literal id
  std::vector<std::vector<int>> by_head;     // literal id -> rule indices
  std::vector<std::vector<int>> by_ant;      // literal id -> rule indices
  std::vector<std::vector<int>> winners;     // rule idx -> rules superior to it
  std::map<std::string, int> rule_ids;

  int intern(const std::string& atom) {
    auto [it, inserted] = atom_ids.emplace(atom, (int)atoms.size());
    if (inserted) atoms.push_back(atom);
    return it->second;
  }
  int lit_id(const Literal& l) { return intern(l.atom) * 2 + (l.negated ? 1 : 0); }
  Literal literal_of(int id) const { return Literal{atoms[id / 2], (id & 1) != 0}; }
  int nlits() const { return (int)atoms.size() * 2; }

  explicit Impl(const ArgTheory& t) {
    for (const Rule& r : t.rules) {
      CRule cr;
      cr.head = lit_id(r.consequent);
      cr.kind = r.kind;
      cr.label = r.label;
      for (const Antecedent& a : r.antecedents) {
        const auto* pl = std::get_if<Literal>(&a);
        if (!pl) throw Error("modal antecedent in argumentation rule '" + r.label + "'");
        int id = lit_id(*pl);
        if (std::find(cr.ants.begin(), cr.ants.end(), id) == cr.ants.end())
          cr.ants.push_back(id);
      }
      if (!rule_ids.emplace(r.label, (int)rules.size()).second)
        throw Error("duplicate rule label '" + r.label + "'");
      rules.push_back(std::move(cr));
    }
    fact.assign(nlits(), 0);
    for (const Literal& f : t.facts) {
      int id = lit_id(f);
      if (id >= (int)fact.size()) fact.resize(nlits(), 0);
      fact[id] = 1;
    }
    fact.resize(nlits(), 0);
    by_head.assign(nlits(), {});
    by_ant.assign(nlits(), {});
    for (int i = 0; i < (int)rules.size(); ++i) {
      by_head[rules[i].head].push_back(i);
      for (int a : rules[i].ants) by_ant[a].push_back(i);
    }
    winners.assign(rules.size(), {});
    for (const auto& [w, l] : t.superiority) {
      auto wi = rule_ids.find(w);
      auto li = rule_ids.find(l);
      if (wi == rule_ids.end() || li == rule_ids.end())
        throw Error("superiority names unknown rule '" + (wi == rule_ids.end() ? w : l) + "'");
      auto& vec = winners[li->second];
      if (std::find(vec.begin(), vec.end(), wi->second) == vec.end())
        vec.push_back(wi->second);
    }
  }
};

namespace {

using Impl = ExtensionSolver::Impl;

// One fixpoint evaluation over a subset of the rules. Records assignment
// stamps and minimal "why" data so derivation traces can be reconstructed.
struct Run {
  const Impl& th;
  const std::vector<char>& active;

  std::vector<Status> delta, partial;
  std::vector<int> delta_stamp, partial_stamp;
  std::vector<int> delta_why;         // -1 fact, else firing strict rule; -2 unset
  std::vector<int> delta_killer;      // per rule: antecedent that rejected it at D level
  std::vector<int> partial_clause;    // 1, 2, 21, 22, 23; 0 unset
  std::vector<int> partial_why_rule;  // support rule for +d(2), attacker for -d(23)
  int stamp = 1;

  // rule state at the d level
  std::vector<int> proved_cnt;
  std::vector<char> discarded;
  std::vector<int> discard_killer;

  explicit Run(const Impl& t, const std::vector<char>& mask) : th(t), active(mask) {
    int n = th.nlits();
    delta.assign(n, Status::Undetermined);
    partial.assign(n, Status::Undetermined);
    delta_stamp.assign(n, 0);
    partial_stamp.assign(n, 0);
    delta_why.assign(n, -2);
    partial_clause.assign(n, 0);
    partial_why_rule.assign(n, -1);
    delta_killer.assign(th.rules.size(), -1);
    proved_cnt.assign(th.rules.size(), 0);
    discarded.assign(th.rules.size(), 0);
    discard_killer.assign(th.rules.size(), -1);
  }

  bool applicable(int r) const {
    return proved_cnt[r] == (int)th.rules[r].ants.size();
  }
  bool usable(int r) const { return active[r]; }

  void run_delta() {
    const auto& rules = th.rules;
    std::deque<int> q;
    std::vector<int> need(rules.size(), 0);
    auto set_proved = [&](int l, int why) {
      if (delta[l] != Status::Undetermined) return;
      delta[l] = Status::Proved;
      delta_stamp[l] = stamp++;
      delta_why[l] = why;
      q.push_back(l);
    };
    for (int l = 0; l < th.nlits(); ++l)
      if (th.fact[l]) set_proved(l, -1);
    for (int r = 0; r < (int)rules.size(); ++r) {
      if (!usable(r) || rules[r].kind != RuleKind::Strict) continue;
      need[r] = (int)rules[r].ants.size();
      if (need[r] == 0) set_proved(rules[r].head, r);
    }
    while (!q.empty()) {
      int l = q.front();
      q.pop_front();
      for (int r : th.by_ant[l]) {
        if (!usable(r) || rules[r].kind != RuleKind::Strict) continue;
        if (--need[r] == 0) set_proved(rules[r].head, r);
      }
    }
    // -D: a literal is rejected once it is not a fact and every strict rule
    // for it has a rejected antecedent.
    std::vector<int> alive(th.nlits(), 0);
    std::vector<char> dead(rules.size(), 0);
    for (int r = 0; r < (int)rules.size(); ++r)
      if (usable(r) && rules[r].kind == RuleKind::Strict) ++alive[rules[r].head];
    std::deque<int> rq;
    auto set_rejected = [&](int l) {
      if (delta[l] != Status::Undetermined) return;
      delta[l] = Status::Rejected;
      delta_stamp[l] = stamp++;
      rq.push_back(l);
    };
    for (int l = 0; l < th.nlits(); ++l)
      if (!th.fact[l] && alive[l] == 0) set_rejected(l);
    while (!rq.empty()) {
      int l = rq.front();
      rq.pop_front();
      for (int r : th.by_ant[l]) {
        if (!usable(r) || rules[r].kind != RuleKind::Strict || dead[r]) continue;
        dead[r] = 1;
        delta_killer[r] = l;
        int h = rules[r].head;
        if (--alive[h] == 0 && !th.fact[h]) set_rejected(h);
      }
    }
  }

  void run_partial() {
    const auto& rules = th.rules;
    std::deque<int> q;
    std::vector<char> queued(th.nlits(), 0);
    auto push = [&](int l) {
      if (!queued[l] && partial[l] == Status::Undetermined) {
        queued[l] = 1;
        q.push_back(l);
      }
    };
    auto on_rule_change = [&](int r) {
      push(rules[r].head);
      push(rules[r].head ^ 1);
    };
    auto set_partial = [&](int l, Status s, int clause, int why_rule) {
      partial[l] = s;
      partial_stamp[l] = stamp++;
      partial_clause[l] = clause;
      partial_why_rule[l] = why_rule;
      for (int r : th.by_ant[l]) {
        if (!usable(r)) continue;
        if (s == Status::Proved) {
          if (++proved_cnt[r] == (int)rules[r].ants.size()) on_rule_change(r);
        } else if (!discarded[r]) {
          discarded[r] = 1;
          discard_killer[r] = l;
          on_rule_change(r);
        }
      }
    };
    for (int l = 0; l < th.nlits(); ++l) push(l);
    while (!q.empty()) {
      int l = q.front();
      q.pop_front();
      queued[l] = 0;
      if (partial[l] != Status::Undetermined) continue;
      // +d clause (1)
      if (delta[l] == Status::Proved) {
        set_partial(l, Status::Proved, 1, -1);
        continue;
      }
      // +d clause (2)
      if (delta[l ^ 1] == Status::Rejected) {
        int support = -1;
        for (int r : th.by_head[l])
          if (usable(r) && rules[r].kind != RuleKind::Defeater && applicable(r)) {
            support = r;
            break;
          }
        if (support >= 0) {
          bool all_ok = true;
          for (int s : th.by_head[l ^ 1]) {
            if (!usable(s) || discarded[s]) continue;
            bool defeated = false;
            for (int t : th.winners[s])
              if (usable(t) && rules[t].head == l && applicable(t)) {
                defeated = true;
                break;
              }
            if (!defeated) {
              all_ok = false;
              break;
            }
          }
          if (all_ok) {
            set_partial(l, Status::Proved, 2, support);
            continue;
          }
        }
      }
      // -d
      if (delta[l] == Status::Rejected) {
        if (delta[l ^ 1] == Status::Proved) {
          set_partial(l, Status::Rejected, 21, -1);
          continue;
        }
        bool all_disc = true;
        for (int r : th.by_head[l])
          if (usable(r) && rules[r].kind != RuleKind::Defeater && !discarded[r]) {
            all_disc = false;
            break;
          }
        if (all_disc) {
          set_partial(l, Status::Rejected, 22, -1);
          continue;
        }
        int attacker = -1;
        for (int s : th.by_head[l ^ 1]) {
          if (!usable(s) || !applicable(s)) continue;
          bool undefeated = true;
          for (int t : th.winners[s])
            if (usable(t) && rules[t].head == l && !discarded[t]) {
              undefeated = false;
              break;
            }
          if (undefeated) {
            attacker = s;
            break;
          }
        }
        if (attacker >= 0) set_partial(l, Status::Rejected, 23, attacker);
      }
    }
  }

  void run() {
    run_delta();
    run_partial();
  }
};

Extension build_extension(const Impl& th, const Run& run, bool with_partial) {
  Extension ext;
  for (int a = 0; a < (int)th.atoms.size(); ++a) {
    for (int neg = 0; neg < 2; ++neg) {
      int id = a * 2 + neg;
      LiteralTags tags;
      tags.delta = run.delta[id];
      if (with_partial) tags.partial = run.partial[id];
      ext.entries.emplace(th.literal_of(id), tags);
    }
  }
  if (with_partial) {
    for (int a = 0; a < (int)th.atoms.size(); ++a) {
      if (run.partial[a * 2] == Status::Proved && run.partial[a * 2 + 1] == Status::Proved)
        ext.warnings.push_back("conflicting conclusions: both " + th.atoms[a] + " and ~" +
                               th.atoms[a] + " are defeasibly provable");
    }
  }
  return ext;
}

}  // namespace

// ---------------------------------------------------------------------------
// ExtensionSolver
// ---------------------------------------------------------------------------

ExtensionSolver::ExtensionSolver(const ArgTheory& theory)
    : impl_(std::make_shared<Impl>(theory)) {}

std::size_t ExtensionSolver::rule_count() const { return impl_->rules.size(); }

int ExtensionSolver::rule_index(const std::string& label) const {
  auto it = impl_->rule_ids.find(label);
  return it == impl_->rule_ids.end() ? -1 : it->second;
}

Extension ExtensionSolver::compute(const std::vector<char>& active_rules) const {
  Run run(*impl_, active_rules);
  run.run();
  return build_extension(*impl_, run, true);
}

Extension ExtensionSolver::compute_all() const {
  std::vector<char> mask(impl_->rules.size(), 1);
  return compute(mask);
}

std::pair<Status, Status> ExtensionSolver::goal_partial(const std::vector<char>& active_rules,
                                                        const Literal& goal) const {
  Run run(*impl_, active_rules);
  run.run();
  auto it = impl_->atom_ids.find(goal.atom);
  if (it == impl_->atom_ids.end()) return {Status::Rejected, Status::Rejected};
  int id = it->second * 2 + (goal.negated ? 1 : 0);
  return {run.partial[id], run.partial[id ^ 1]};
}

Extension compute_definite(const ArgTheory& t) {
  auto impl = std::make_shared<Impl>(t);
  std::vector<char> mask(impl->rules.size(), 1);
  Run run(*impl, mask);
  run.run_delta();
  return build_extension(*impl, run, false);
}

Extension compute_extension(const ArgTheory& t) { return ExtensionSolver(t).compute_all(); }

bool is_applicable(const Rule& r, const Extension& partial) {
  for (const Antecedent& a : r.antecedents) {
    const auto* pl = std::get_if<Literal>(&a);
    if (!pl || partial.at(*pl).partial != Status::Proved) return false;
  }
  return true;
}

bool is_discarded(const Rule& r, const Extension& partial) {
  for (const Antecedent& a : r.antecedents) {
    const auto* pl = std::get_if<Literal>(&a);
    if (pl && partial.at(*pl).partial == Status::Rejected) return true;
  }
  return false;
}

// ---------------------------------------------------------------------------
// prove: answer + derivation trace reconstructed from the fixpoint stamps
// ---------------------------------------------------------------------------

namespace {

struct TraceBuilder {
  const Impl& th;
  const Run& run;
  DerivationTrace trace;
  std::map<std::pair<int, int>, std::size_t> memo;  // (tag key, lit) -> line

  static int key(ProofTag t) { return (t.positive ? 2 : 0) + (t.definite ? 1 : 0); }

  std::size_t emit(ProofTag tag, int l) {
    auto mk = std::make_pair(key(tag), l);
    auto it = memo.find(mk);
    if (it != memo.end()) return it->second;
    TraceLine line;
    line.tag = tag;
    line.literal = th.literal_of(l);
    if (tag.definite && tag.positive) {
      int why = run.delta_why[l];
      if (why == -1) {
        line.clause = "+D(1): fact";
      } else {
        line.clause = "+D(2): strict rule with definitely provable antecedents";
        line.rule_labels.push_back(th.rules[why].label);
        for (int a : th.rules[why].ants) line.premises.push_back(emit({true, true}, a));
      }
    } else if (tag.definite && !tag.positive) {
      line.clause = "-D: not a fact and every strict rule has a rejected antecedent";
      for (int r : th.by_head[l]) {
        if (!run.usable(r) || th.rules[r].kind != RuleKind::Strict) continue;
        line.rule_labels.push_back(th.rules[r].label);
        line.premises.push_back(emit({false, true}, run.delta_killer[r]));
      }
    } else if (!tag.definite && tag.positive) {
      if (run.partial_clause[l] == 1) {
        line.clause = "+d(1): definitely provable";
        line.premises.push_back(emit({true, true}, l));
      } else {
        int support = run.partial_why_rule[l];
        line.clause = "+d(2): applicable rule, all attacks discarded or defeated";
        line.rule_labels.push_back(th.rules[support].label);
        line.premises.push_back(emit({false, true}, l ^ 1));
        int my = run.partial_stamp[l];
        for (int a : th.rules[support].ants) line.premises.push_back(emit({true, false}, a));
        for (int s : th.by_head[l ^ 1]) {
          if (!run.usable(s)) continue;
          int killer = discarded_before(s, my);
          if (killer >= 0) {
            line.premises.push_back(emit({false, false}, killer));
            continue;
          }
          int t = defeater_before(s, l, my);
          line.rule_labels.push_back(th.rules[t].label);
          for (int a : th.rules[t].ants) line.premises.push_back(emit({true, false}, a));
        }
      }
    } else {
      line.premises.push_back(emit({false, true}, l));
      int clause = run.partial_clause[l];
      int my = run.partial_stamp[l];
      if (clause == 21) {
        line.clause = "-d(2.1): complement definitely provable";
        line.premises.push_back(emit({true, true}, l ^ 1));
      } else if (clause == 22) {
        line.clause = "-d(2.2): every supporting rule discarded";
        for (int r : th.by_head[l]) {
          if (!run.usable(r) || th.rules[r].kind == RuleKind::Defeater) continue;
          line.rule_labels.push_back(th.rules[r].label);
          line.premises.push_back(emit({false, false}, discarded_before(r, my)));
        }
      } else {
        int s = run.partial_why_rule[l];
        line.clause = "-d(2.3): applicable attack no rule for the literal overrules";
        line.rule_labels.push_back(th.rules[s].label);
        for (int a : th.rules[s].ants) line.premises.push_back(emit({true, false}, a));
        for (int t : th.winners[s]) {
          if (!run.usable(t) || th.rules[t].head != l) continue;
          line.premises.push_back(emit({false, false}, discarded_before(t, my)));
        }
      }
    }
    trace.lines.push_back(std::move(line));
    std::size_t idx = trace.lines.size() - 1;
    memo.emplace(mk, idx);
    return idx;
  }

  // Antecedent of rule r that was d-rejected before stamp `before`.
  int discarded_before(int r, int before) const {
    for (int a : th.rules[r].ants)
      if (run.partial[a] == Status::Rejected && run.partial_stamp[a] < before) return a;
    return -1;
  }

  // A rule for `head` superior to s, applicable before stamp `before`.
  int defeater_before(int s, int head, int before) const {
    for (int t : th.winners[s]) {
      if (!run.usable(t) || th.rules[t].head != head) continue;
      bool ok = true;
      for (int a : th.rules[t].ants)
        if (run.partial[a] != Status::Proved || run.partial_stamp[a] >= before) {
          ok = false;
          break;
        }
      if (ok) return t;
    }
    return -1;
  }
};

}  // namespace

ProveResult prove(const ArgTheory& t, ProofTag tag, const Literal& q) {
  auto impl = std::make_shared<Impl>(t);
  std::vector<char> mask(impl->rules.size(), 1);
  Run run(*impl, mask);
  run.run();

  ProveResult result;
  auto it = impl->atom_ids.find(q.atom);
  Status got;
  int id = -1;
  if (it == impl->atom_ids.end()) {
    // Unmentioned literals have no rules and are not facts: -D and -d hold.
    got = Status::Rejected;
  } else {
    id = it->second * 2 + (q.negated ? 1 : 0);
    got = tag.definite ? run.delta[id] : run.partial[id];
  }
  Status want = tag.positive ? Status::Proved : Status::Rejected;
  Status other = tag.positive ? Status::Rejected : Status::Proved;
  if (got == want) {
    result.answer = Answer::Yes;
    if (id >= 0) {
      TraceBuilder tb{*impl, run, {}, {}};
      tb.emit(ProofTag{got == Status::Proved, tag.definite}, id);
      result.trace = std::move(tb.trace);
    } else {
      TraceLine line;
      line.tag = tag;
      line.literal = q;
      line.clause = tag.definite ? "-D: not a fact, no strict rules"
                                 : "-d(2.2): no supporting rules";
      result.trace.lines.push_back(std::move(line));
    }
  } else if (got == other) {
    result.answer = Answer::No;
  } else {
    result.answer = Answer::Undetermined;
  }
  return result;
}

}  // namespace dfl
