#include "dfl/bio.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <set>

namespace dfl {

ModalTags ModalExtension::at(Modality m, const Literal& q) const {
  auto it = entries.find({m, q});
  if (it != entries.end()) return it->second;
  return ModalTags{Status::Rejected, Status::Rejected, Status::Rejected};
}

namespace {

constexpr int kModes = 3;

int mode_idx(Modality m) { return static_cast<int>(m); }
Modality mode_of(int i) { return static_cast<Modality>(i); }

// How a rule participates in a proof for mode X. A rule may act through
// several routes at once; each has its own applicability test.
enum class Route : std::uint8_t {
  Same,      // rule of mode X, antecedents read as written
  Conv,      // belief-style conversion into X: every antecedent a needs +d_X a
  CfPlain,   // rule of a conflicting mode, applicable as written
  ConvCf,    // converted into Y, attacking X through the mode conflict
};

struct RouteUse {
  Route route;
  Modality via = Modality::BEL;  // conversion target for Conv/ConvCf
};

struct BioSolver {
  struct BAnt {
    enum Kind : std::uint8_t { Plain, Modal, NegModal } kind = Plain;
    Modality modality = Modality::OBL;  // for Modal/NegModal
    int lit = 0;
  };
  struct BRule {
    Modality mode = Modality::BEL;
    RuleKind kind = RuleKind::Defeasible;
    int head = 0;
    std::vector<BAnt> ants;
    std::string label;
    bool eligible = false;  // all antecedents plain: may fire by conversion
    bool has_neg_modal = false;
  };

  std::vector<std::string> atoms;
  std::map<std::string, int> atom_ids;
  std::vector<BRule> rules;
  std::vector<std::vector<int>> by_head;
  std::map<std::string, int> rule_ids;
  std::vector<std::vector<int>> declared_winners;  // loser -> winners
  std::array<std::array<bool, kModes>, kModes> cv{}, cf{};
  std::vector<char> plain_fact;
  std::array<std::vector<char>, kModes> modal_fact;

  // statuses and trace bookkeeping, indexed [mode][lit]
  std::array<std::vector<Status>, kModes> D, P, S;
  std::array<std::vector<int>, kModes> d_stamp, p_stamp;
  std::array<std::vector<int>, kModes> d_clause, p_clause;  // 0 unset
  std::array<std::vector<int>, kModes> d_rule, p_rule;
  std::array<std::vector<RouteUse>, kModes> p_route;
  int stamp = 1;

  int intern(const std::string& atom) {
    auto [it, inserted] = atom_ids.emplace(atom, (int)atoms.size());
    if (inserted) atoms.push_back(atom);
    return it->second;
  }
  int lit_id(const Literal& l) { return intern(l.atom) * 2 + (l.negated ? 1 : 0); }
  Literal literal_of(int id) const { return Literal{atoms[id / 2], (id & 1) != 0}; }
  int nlits() const { return (int)atoms.size() * 2; }

  explicit BioSolver(const AgentTheory& t) {
    for (const auto& [from, to] : t.conversions) cv[mode_idx(from)][mode_idx(to)] = true;
    for (const auto& [from, to] : t.conflicts) cf[mode_idx(from)][mode_idx(to)] = true;
    for (const Rule& r : t.rules) {
      if (!r.mode) throw Error("rule '" + r.label + "' lacks a mode");
      BRule br;
      br.mode = *r.mode;
      br.kind = r.kind;
      br.head = lit_id(r.consequent);
      br.label = r.label;
      br.eligible = true;
      for (const Antecedent& a : r.antecedents) {
        BAnt ba;
        if (const auto* pl = std::get_if<Literal>(&a)) {
          ba.kind = BAnt::Plain;
          ba.lit = lit_id(*pl);
        } else {
          const ModalLiteral& m = std::get<ModalLiteral>(a);
          ba.kind = m.outer_negated ? BAnt::NegModal : BAnt::Modal;
          ba.modality = m.modality;
          ba.lit = lit_id(m.literal);
          br.eligible = false;
          if (m.outer_negated) br.has_neg_modal = true;
        }
        br.ants.push_back(ba);
      }
      if (!rule_ids.emplace(r.label, (int)rules.size()).second)
        throw Error("duplicate rule label '" + r.label + "'");
      rules.push_back(std::move(br));
    }
    for (const Fact& f : t.facts) {
      if (const auto* pl = std::get_if<Literal>(&f)) {
        lit_id(*pl);
      } else {
        lit_id(std::get<ModalLiteral>(f).literal);
      }
    }
    int n = nlits();
    plain_fact.assign(n, 0);
    for (auto& v : modal_fact) v.assign(n, 0);
    for (const Fact& f : t.facts) {
      if (const auto* pl = std::get_if<Literal>(&f)) {
        plain_fact[lit_id(*pl)] = 1;
      } else {
        const ModalLiteral& m = std::get<ModalLiteral>(f);
        if (m.outer_negated) throw Error("outer-negated modal fact '" + to_string(m) + "'");
        modal_fact[mode_idx(m.modality)][lit_id(m.literal)] = 1;
      }
    }
    by_head.assign(n, {});
    for (int i = 0; i < (int)rules.size(); ++i) by_head[rules[i].head].push_back(i);
    declared_winners.assign(rules.size(), {});
    for (const auto& [w, l] : t.superiority) {
      auto wi = rule_ids.find(w);
      auto li = rule_ids.find(l);
      if (wi == rule_ids.end() || li == rule_ids.end())
        throw Error("superiority names unknown rule '" + (wi == rule_ids.end() ? w : l) + "'");
      auto& vec = declared_winners[li->second];
      if (std::find(vec.begin(), vec.end(), wi->second) == vec.end())
        vec.push_back(wi->second);
    }
    for (int m = 0; m < kModes; ++m) {
      D[m].assign(n, Status::Undetermined);
      P[m].assign(n, Status::Undetermined);
      S[m].assign(n, Status::Undetermined);
      d_stamp[m].assign(n, 0);
      p_stamp[m].assign(n, 0);
      d_clause[m].assign(n, 0);
      p_clause[m].assign(n, 0);
      d_rule[m].assign(n, -1);
      p_rule[m].assign(n, -1);
      p_route[m].assign(n, RouteUse{Route::Same});
    }
  }

  bool is_fact(int X, int q) const {
    return X == mode_idx(Modality::BEL) ? plain_fact[q] != 0 : modal_fact[X][q] != 0;
  }

  // Superiority as Def. 8: declared same-mode pairs plus the Cf-induced order
  // (a rule of a prevailing mode beats any conflicting rule with the
  // complementary head). The induced part is computed on demand.
  bool superior(int t, int s) const {
    const auto& w = declared_winners[s];
    if (std::find(w.begin(), w.end(), t) != w.end()) return true;
    return cf[mode_idx(rules[t].mode)][mode_idx(rules[s].mode)] &&
           rules[t].head == (rules[s].head ^ 1);
  }

  std::vector<RouteUse> attack_routes(int r, int X) const {
    std::vector<RouteUse> out;
    const BRule& br = rules[r];
    int Z = mode_idx(br.mode);
    if (Z == X) {
      out.push_back({Route::Same});
      return out;
    }
    bool sd = br.kind != RuleKind::Defeater;
    if (cv[Z][X] && br.eligible && sd) out.push_back({Route::Conv, mode_of(X)});
    if (cf[Z][X]) {
      out.push_back({Route::CfPlain});
      if (br.eligible && sd)
        for (int Y = 0; Y < kModes; ++Y)
          if (Y != X && Y != Z && cv[Z][Y]) out.push_back({Route::ConvCf, mode_of(Y)});
    }
    return out;
  }

  // The single route (if any) through which r can support +d_X conclusions.
  std::optional<RouteUse> support_route(int r, int X) const {
    const BRule& br = rules[r];
    if (br.kind == RuleKind::Defeater) return std::nullopt;
    int Z = mode_idx(br.mode);
    if (Z == X) return RouteUse{Route::Same};
    if (cv[Z][X] && br.eligible) return RouteUse{Route::Conv, mode_of(X)};
    return std::nullopt;
  }

  // --- antecedent evaluation ------------------------------------------------

  // Provability of an antecedent as written (Def. provable): plain literals in
  // BEL, modal literals in their own mode, outer negation by rejection.
  Status ant_status_plain(const std::array<std::vector<Status>, kModes>& tab,
                          const BAnt& a) const {
    switch (a.kind) {
      case BAnt::Plain: return tab[mode_idx(Modality::BEL)][a.lit];
      case BAnt::Modal: return tab[mode_idx(a.modality)][a.lit];
      case BAnt::NegModal: {
        Status s = tab[mode_idx(a.modality)][a.lit];
        if (s == Status::Rejected) return Status::Proved;
        if (s == Status::Proved) return Status::Rejected;
        return Status::Undetermined;
      }
    }
    return Status::Undetermined;
  }

  bool route_applicable(const std::array<std::vector<Status>, kModes>& tab, int r,
                        const RouteUse& u) const {
    const BRule& br = rules[r];
    for (const BAnt& a : br.ants) {
      Status s;
      if (u.route == Route::Same || u.route == Route::CfPlain) {
        s = ant_status_plain(tab, a);
      } else {
        s = tab[mode_idx(u.via)][a.lit];  // antecedents are plain by eligibility
      }
      if (s != Status::Proved) return false;
    }
    return true;
  }

  bool route_discarded(const std::array<std::vector<Status>, kModes>& tab, int r,
                       const RouteUse& u) const {
    const BRule& br = rules[r];
    for (const BAnt& a : br.ants) {
      Status s;
      if (u.route == Route::Same || u.route == Route::CfPlain) {
        s = ant_status_plain(tab, a);
      } else {
        s = tab[mode_idx(u.via)][a.lit];
      }
      if (s == Status::Rejected) return true;
    }
    return false;
  }

  // Every route through which r could act in X-proofs is discarded (or there
  // is none): in the flattened theory no counterpart of r would survive.
  bool dead_for(const std::array<std::vector<Status>, kModes>& tab, int r, int X) const {
    for (const RouteUse& u : attack_routes(r, X))
      if (!route_discarded(tab, r, u)) return false;
    return true;
  }

  bool applicable_for(const std::array<std::vector<Status>, kModes>& tab, int r, int X) const {
    for (const RouteUse& u : attack_routes(r, X))
      if (route_applicable(tab, r, u)) return true;
    return false;
  }

  // --- definite level --------------------------------------------------------

  // Strict rules carrying an outer-negated modal antecedent cannot establish
  // definite conclusions (their flattened support is defeasible only).
  bool delta_rule_fires(const BRule& br) const {
    if (br.has_neg_modal) return false;
    for (const BAnt& a : br.ants)
      if (ant_status_plain(D, a) != Status::Proved) return false;
    return true;
  }
  bool delta_rule_dead(const BRule& br) const {
    if (br.has_neg_modal) return true;
    for (const BAnt& a : br.ants)
      if (ant_status_plain(D, a) == Status::Rejected) return true;
    return false;
  }

  bool try_delta(int X, int q) {
    if (D[X][q] != Status::Undetermined) return false;
    // +D_X
    if (is_fact(X, q)) {
      set_delta(X, q, Status::Proved, 1, -1);
      return true;
    }
    for (int r : by_head[q]) {
      const BRule& br = rules[r];
      if (br.kind != RuleKind::Strict) continue;
      if (mode_idx(br.mode) == X && delta_rule_fires(br)) {
        set_delta(X, q, Status::Proved, 2, r);
        return true;
      }
      if (mode_idx(br.mode) != X && cv[mode_idx(br.mode)][X] && br.eligible) {
        bool all = true;
        for (const BAnt& a : br.ants)
          if (D[X][a.lit] != Status::Proved) {
            all = false;
            break;
          }
        if (all) {
          set_delta(X, q, Status::Proved, 3, r);
          return true;
        }
      }
    }
    // -D_X
    bool all_blocked = true;
    for (int r : by_head[q]) {
      const BRule& br = rules[r];
      if (br.kind != RuleKind::Strict) continue;
      if (mode_idx(br.mode) == X) {
        if (!delta_rule_dead(br)) {
          all_blocked = false;
          break;
        }
      } else if (cv[mode_idx(br.mode)][X]) {
        if (!br.eligible) continue;
        bool dead = false;
        for (const BAnt& a : br.ants)
          if (D[X][a.lit] == Status::Rejected) {
            dead = true;
            break;
          }
        if (!dead) {
          all_blocked = false;
          break;
        }
      }
    }
    if (all_blocked) {
      set_delta(X, q, Status::Rejected, 0, -1);
      return true;
    }
    return false;
  }

  void set_delta(int X, int q, Status s, int clause, int rule) {
    D[X][q] = s;
    d_stamp[X][q] = stamp++;
    d_clause[X][q] = clause;
    d_rule[X][q] = rule;
  }

  // --- defeasible level -------------------------------------------------------

  bool try_partial(int X, int q) {
    if (P[X][q] != Status::Undetermined) return false;
    int comp = q ^ 1;
    // +d_X clause (1)
    if (D[X][q] == Status::Proved) {
      set_partial(X, q, Status::Proved, 1, -1, RouteUse{Route::Same});
      return true;
    }
    // +d_X clause (2)
    if (D[X][comp] == Status::Rejected) {
      int support = -1;
      for (int r : by_head[q]) {
        auto u = support_route(r, X);
        if (u && route_applicable(P, r, *u)) {
          support = r;
          break;
        }
      }
      if (support >= 0) {
        bool all_ok = true;
        for (int s : by_head[comp]) {
          if (neutralized(s, q, X)) continue;
          all_ok = false;
          break;
        }
        if (all_ok) {
          set_partial(X, q, Status::Proved, 2, support, RouteUse{Route::Same});
          return true;
        }
      }
    }
    // -d_X
    if (D[X][q] == Status::Rejected) {
      if (D[X][comp] == Status::Proved) {
        set_partial(X, q, Status::Rejected, 21, -1, RouteUse{Route::Same});
        return true;
      }
      bool all_disc = true;
      for (int r : by_head[q]) {
        auto u = support_route(r, X);
        if (u && !route_discarded(P, r, *u)) {
          all_disc = false;
          break;
        }
      }
      if (all_disc) {
        set_partial(X, q, Status::Rejected, 22, -1, RouteUse{Route::Same});
        return true;
      }
      for (int s : by_head[comp]) {
        for (const RouteUse& u : attack_routes(s, X)) {
          if (!route_applicable(P, s, u)) continue;
          bool undefeated = true;
          for (int t : by_head[q]) {
            if (!superior(t, s)) continue;
            if (!dead_for(P, t, X)) {
              undefeated = false;
              break;
            }
          }
          if (undefeated) {
            set_partial(X, q, Status::Rejected, 23, s, u);
            return true;
          }
        }
      }
    }
    return false;
  }

  // Attack s on q in an X-proof is neutralized when every route of s is
  // discarded or some applicable rule for q beats s.
  bool neutralized(int s, int q, int X) const {
    auto routes = attack_routes(s, X);
    if (routes.empty()) return true;
    bool all_disc = true;
    for (const RouteUse& u : routes)
      if (!route_discarded(P, s, u)) {
        all_disc = false;
        break;
      }
    if (all_disc) return true;
    for (int t : by_head[q])
      if (superior(t, s) && applicable_for(P, t, X)) return true;
    return false;
  }

  void set_partial(int X, int q, Status s, int clause, int rule, RouteUse route) {
    P[X][q] = s;
    p_stamp[X][q] = stamp++;
    p_clause[X][q] = clause;
    p_rule[X][q] = rule;
    p_route[X][q] = route;
  }

  // Stamp of the underlying assignment an antecedent's status rests on.
  int ant_stamp(bool definite, const BAnt& a) const {
    int X = a.kind == BAnt::Plain ? mode_idx(Modality::BEL) : mode_idx(a.modality);
    return definite ? d_stamp[X][a.lit] : p_stamp[X][a.lit];
  }

  bool route_applicable_before(int r, const RouteUse& u, int before) const {
    const BRule& br = rules[r];
    for (const BAnt& a : br.ants) {
      if (u.route == Route::Same || u.route == Route::CfPlain) {
        if (ant_status_plain(P, a) != Status::Proved || ant_stamp(false, a) >= before)
          return false;
      } else {
        int Y = mode_idx(u.via);
        if (P[Y][a.lit] != Status::Proved || p_stamp[Y][a.lit] >= before) return false;
      }
    }
    return true;
  }

  // Index into ants of a rejection witness assigned before `before`, or -1.
  int route_discard_witness_before(int r, const RouteUse& u, int before) const {
    const BRule& br = rules[r];
    for (int i = 0; i < (int)br.ants.size(); ++i) {
      const BAnt& a = br.ants[i];
      if (u.route == Route::Same || u.route == Route::CfPlain) {
        if (ant_status_plain(P, a) == Status::Rejected && ant_stamp(false, a) < before) return i;
      } else {
        int Y = mode_idx(u.via);
        if (P[Y][a.lit] == Status::Rejected && p_stamp[Y][a.lit] < before) return i;
      }
    }
    return -1;
  }

  void saturate() {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int X = 0; X < kModes; ++X)
        for (int q = 0; q < nlits(); ++q) changed |= try_delta(X, q);
    }
    changed = true;
    while (changed) {
      changed = false;
      for (int X = 0; X < kModes; ++X)
        for (int q = 0; q < nlits(); ++q) changed |= try_partial(X, q);
    }
    compute_support();
  }

  // Sigma: applicability of rules usable for X, read off the final d statuses.
  void compute_support() {
    for (int X = 0; X < kModes; ++X) {
      for (int q = 0; q < nlits(); ++q) {
        bool any_applicable = false;
        bool all_discarded = true;
        for (int r : by_head[q]) {
          const BRule& br = rules[r];
          std::optional<RouteUse> u;
          if (mode_idx(br.mode) == X) u = RouteUse{Route::Same};
          else if (cv[mode_idx(br.mode)][X] && br.eligible) u = RouteUse{Route::Conv, mode_of(X)};
          if (!u) continue;
          if (route_applicable(P, r, *u)) any_applicable = true;
          else if (!route_discarded(P, r, *u)) all_discarded = false;
        }
        if (any_applicable) S[X][q] = Status::Proved;
        else if (all_discarded) S[X][q] = Status::Rejected;
        else S[X][q] = Status::Undetermined;
      }
    }
  }
};

ModalExtension build(const BioSolver& bs) {
  ModalExtension ext;
  for (int a = 0; a < (int)bs.atoms.size(); ++a) {
    for (int neg = 0; neg < 2; ++neg) {
      int id = a * 2 + neg;
      for (int X = 0; X < kModes; ++X) {
        ModalTags tags{bs.D[X][id], bs.P[X][id], bs.S[X][id]};
        ext.entries.emplace(std::make_pair(mode_of(X), bs.literal_of(id)), tags);
      }
    }
  }
  for (int X = 0; X < kModes; ++X)
    for (int a = 0; a < (int)bs.atoms.size(); ++a)
      if (bs.P[X][a * 2] == Status::Proved && bs.P[X][a * 2 + 1] == Status::Proved)
        ext.warnings.push_back(std::string("conflicting conclusions at ") +
                               std::string(to_string(mode_of(X))) + ": " + bs.atoms[a] +
                               " and ~" + bs.atoms[a]);
  return ext;
}

// --- trace reconstruction -----------------------------------------------------

struct BioTraceBuilder {
  const BioSolver& bs;
  DerivationTrace trace;
  std::map<std::tuple<int, int, int>, std::size_t> memo;  // (tag, mode, lit)

  static int key(ProofTag t) { return (t.positive ? 2 : 0) + (t.definite ? 1 : 0); }

  std::size_t emit_ant(bool definite, const BioSolver::BAnt& a, bool as_rejected) {
    // Premise for an antecedent being provable (or rejected) as written.
    bool positive;
    int X;
    switch (a.kind) {
      case BioSolver::BAnt::Plain:
        X = mode_idx(Modality::BEL);
        positive = !as_rejected;
        break;
      case BioSolver::BAnt::Modal:
        X = mode_idx(a.modality);
        positive = !as_rejected;
        break;
      case BioSolver::BAnt::NegModal:
      default:
        X = mode_idx(a.modality);
        positive = as_rejected;  // ¬Xp provable iff -#_X p
        break;
    }
    return emit(ProofTag{positive, definite}, X, a.lit);
  }

  std::size_t emit(ProofTag tag, int X, int l) {
    auto mk = std::make_tuple(key(tag), X, l);
    auto it = memo.find(mk);
    if (it != memo.end()) return it->second;
    TraceLine line;
    line.tag = tag;
    line.modality = mode_of(X);
    line.literal = bs.literal_of(l);
    if (tag.definite && tag.positive) {
      int clause = bs.d_clause[X][l];
      if (clause == 1) {
        line.clause = "+D(1): fact";
      } else if (clause == 2) {
        int r = bs.d_rule[X][l];
        line.clause = "+D(2): strict rule of the mode";
        line.rule_labels.push_back(bs.rules[r].label);
        for (const auto& a : bs.rules[r].ants) line.premises.push_back(emit_ant(true, a, false));
      } else {
        int r = bs.d_rule[X][l];
        line.clause = "+D(3): strict rule fired by conversion";
        line.rule_labels.push_back(bs.rules[r].label);
        for (const auto& a : bs.rules[r].ants)
          line.premises.push_back(emit(ProofTag{true, true}, X, a.lit));
      }
    } else if (tag.definite && !tag.positive) {
      line.clause = "-D: not a fact and every strict rule blocked";
      int my = bs.d_stamp[X][l];
      for (int r : bs.by_head[l]) {
        const auto& br = bs.rules[r];
        if (br.kind != RuleKind::Strict) continue;
        if (mode_idx(br.mode) == X) {
          if (br.has_neg_modal) continue;
          line.rule_labels.push_back(br.label);
          for (const auto& a : br.ants)
            if (bs.ant_status_plain(bs.D, a) == Status::Rejected && bs.ant_stamp(true, a) < my) {
              line.premises.push_back(emit_ant(true, a, true));
              break;
            }
        } else if (bs.cv[mode_idx(br.mode)][X] && br.eligible) {
          line.rule_labels.push_back(br.label);
          for (const auto& a : br.ants)
            if (bs.D[X][a.lit] == Status::Rejected && bs.d_stamp[X][a.lit] < my) {
              line.premises.push_back(emit(ProofTag{false, true}, X, a.lit));
              break;
            }
        }
      }
    } else if (!tag.definite && tag.positive) {
      int clause = bs.p_clause[X][l];
      if (clause == 1) {
        line.clause = "+d(1): definitely provable";
        line.premises.push_back(emit(ProofTag{true, true}, X, l));
      } else {
        int support = bs.p_rule[X][l];
        int my = bs.p_stamp[X][l];
        line.clause = "+d(2): applicable rule, all attacks discarded or defeated";
        line.rule_labels.push_back(bs.rules[support].label);
        line.premises.push_back(emit(ProofTag{false, true}, X, l ^ 1));
        auto u = bs.support_route(support, X);
        emit_route_premises(line, support, *u);
        for (int s : bs.by_head[l ^ 1]) {
          auto routes = bs.attack_routes(s, X);
          if (routes.empty()) continue;
          bool all_disc = true;
          for (const auto& ru : routes)
            if (bs.route_discard_witness_before(s, ru, my) < 0) {
              all_disc = false;
              break;
            }
          if (all_disc) {
            for (const auto& ru : routes) emit_route_discard(line, s, ru, my);
            continue;
          }
          for (int t : bs.by_head[l]) {
            if (!bs.superior(t, s)) continue;
            bool found = false;
            for (const auto& tu : bs.attack_routes(t, X))
              if (bs.route_applicable_before(t, tu, my)) {
                line.rule_labels.push_back(bs.rules[t].label);
                emit_route_premises(line, t, tu);
                found = true;
                break;
              }
            if (found) break;
          }
        }
      }
    } else {
      line.premises.push_back(emit(ProofTag{false, true}, X, l));
      int clause = bs.p_clause[X][l];
      int my = bs.p_stamp[X][l];
      if (clause == 21) {
        line.clause = "-d(2.1): complement definitely provable";
        line.premises.push_back(emit(ProofTag{true, true}, X, l ^ 1));
      } else if (clause == 22) {
        line.clause = "-d(2.2): every supporting rule discarded";
        for (int r : bs.by_head[l]) {
          auto u = bs.support_route(r, X);
          if (!u) continue;
          line.rule_labels.push_back(bs.rules[r].label);
          emit_route_discard(line, r, *u, my);
        }
      } else {
        int s = bs.p_rule[X][l];
        line.clause = "-d(2.3): applicable attack no rule for the literal overrules";
        line.rule_labels.push_back(bs.rules[s].label);
        emit_route_premises(line, s, bs.p_route[X][l]);
        for (int t : bs.by_head[l]) {
          if (!bs.superior(t, s)) continue;
          for (const auto& tu : bs.attack_routes(t, X)) emit_route_discard(line, t, tu, my);
        }
      }
    }
    trace.lines.push_back(std::move(line));
    std::size_t idx = trace.lines.size() - 1;
    memo.emplace(mk, idx);
    return idx;
  }

  void emit_route_premises(TraceLine& line, int r, const RouteUse& u) {
    for (const auto& a : bs.rules[r].ants) {
      if (u.route == Route::Same || u.route == Route::CfPlain) {
        line.premises.push_back(emit_ant(false, a, false));
      } else {
        line.premises.push_back(emit(ProofTag{true, false}, mode_idx(u.via), a.lit));
      }
    }
  }

  void emit_route_discard(TraceLine& line, int r, const RouteUse& u, int before) {
    int i = bs.route_discard_witness_before(r, u, before);
    if (i < 0) return;
    const auto& a = bs.rules[r].ants[i];
    if (u.route == Route::Same || u.route == Route::CfPlain) {
      line.premises.push_back(emit_ant(false, a, true));
    } else {
      line.premises.push_back(emit(ProofTag{false, false}, mode_idx(u.via), a.lit));
    }
  }
};

}  // namespace

ModalExtension compute_bio_extension(const AgentTheory& t) {
  BioSolver bs(t);
  bs.saturate();
  return build(bs);
}

Status support(const AgentTheory& t, Modality m, const Literal& q) {
  return compute_bio_extension(t).at(m, q).support;
}

ProveResult bio_prove(const AgentTheory& t, ProofTag tag, Modality m, const Literal& q) {
  BioSolver bs(t);
  bs.saturate();
  ProveResult result;
  auto it = bs.atom_ids.find(q.atom);
  Status got;
  int id = -1;
  int X = mode_idx(m);
  if (it == bs.atom_ids.end()) {
    got = Status::Rejected;
  } else {
    id = it->second * 2 + (q.negated ? 1 : 0);
    got = tag.definite ? bs.D[X][id] : bs.P[X][id];
  }
  Status want = tag.positive ? Status::Proved : Status::Rejected;
  Status other = tag.positive ? Status::Rejected : Status::Proved;
  if (got == want) {
    result.answer = Answer::Yes;
    if (id >= 0) {
      BioTraceBuilder tb{bs, {}, {}};
      tb.emit(ProofTag{got == Status::Proved, tag.definite}, X, id);
      result.trace = std::move(tb.trace);
    } else {
      TraceLine line;
      line.tag = tag;
      line.modality = m;
      line.literal = q;
      line.clause = tag.definite ? "-D: not a fact, no strict rules" : "-d(2.2): no rules";
      result.trace.lines.push_back(std::move(line));
    }
  } else if (got == other) {
    result.answer = Answer::No;
  } else {
    result.answer = Answer::Undetermined;
  }
  return result;
}

ProveResult bio_prove(const AgentTheory& t, ProofTag tag, const ModalLiteral& query) {
  // ¬Xp is #-provable iff p is #-rejected at X (and vice versa).
  if (query.outer_negated)
    return bio_prove(t, ProofTag{!tag.positive, tag.definite}, query.modality, query.literal);
  return bio_prove(t, tag, query.modality, query.literal);
}

}  // namespace dfl
