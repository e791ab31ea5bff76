#include "dfl/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dfl {

namespace {

std::string prefix_of(Modality m) {
  return m == Modality::OBL ? "obl_" : "int_";
}

// Name stem of a source literal: "p" or "not_p".
std::string pstr(const Literal& q) {
  return q.negated ? "not_" + q.atom : q.atom;
}

std::string guard_atom(Modality m, const Literal& q) {
  return "guard_" + prefix_of(m) + pstr(q);
}

std::string witness_atom(Modality m, const Literal& q) {
  return "not_" + prefix_of(m) + pstr(q);
}

bool starts_with(const std::string& s, const std::string& p) {
  return s.size() >= p.size() && s.compare(0, p.size(), p) == 0;
}

}  // namespace

Literal pflat(const Literal& q) { return q; }

Literal flat(Modality m, const Literal& q) {
  if (m == Modality::BEL) return pflat(q);
  return Literal{prefix_of(m) + q.atom, q.negated};
}

Literal flat(const Antecedent& a) {
  if (const auto* pl = std::get_if<Literal>(&a)) return pflat(*pl);
  const ModalLiteral& m = std::get<ModalLiteral>(a);
  if (m.outer_negated) return Literal{witness_atom(m.modality, m.literal), false};
  return flat(m.modality, m.literal);
}

Literal flat_complement(const Literal& q) {
  if (starts_with(q.atom, "not_obl_") || starts_with(q.atom, "not_int_")) {
    if (q.negated) throw Error("non-flat literal '" + to_string(q) + "'");
    bool obl = starts_with(q.atom, "not_obl_");
    std::string rest = q.atom.substr(8);
    bool neg = starts_with(rest, "not_");
    if (neg) rest = rest.substr(4);
    if (rest.empty()) throw Error("non-flat literal '" + to_string(q) + "'");
    return Literal{(obl ? "obl_" : "int_") + rest, neg};
  }
  return complement(q);
}

TransformResult transform_theory(const AgentTheory& t) {
  {
    auto violations = validate_theory(t);
    if (!violations.empty())
      throw Error("invalid agent theory: " + violations.front().message);
  }
  if (!t.has_default_relations())
    throw Error("transformation requires the default conversion and conflict relations");

  TransformResult out;
  ArgTheory& arg = out.theory;

  std::set<std::string> source_atoms;
  std::set<std::string> source_labels;
  auto note_literal = [&](const Literal& l) { source_atoms.insert(l.atom); };
  for (const Fact& f : t.facts) {
    if (const auto* pl = std::get_if<Literal>(&f)) note_literal(*pl);
    else note_literal(std::get<ModalLiteral>(f).literal);
  }
  for (const Rule& r : t.rules) {
    source_labels.insert(r.label);
    note_literal(r.consequent);
    for (const Antecedent& a : r.antecedents) {
      if (const auto* pl = std::get_if<Literal>(&a)) note_literal(*pl);
      else note_literal(std::get<ModalLiteral>(a).literal);
    }
  }

  std::set<std::string> minted;  // atom names the transformation creates
  std::set<std::string> generated_labels;
  auto mint = [&](Literal l) {
    minted.insert(l.atom);
    return l;
  };
  auto modal_lit = [&](Modality x, const Literal& q) { return mint(flat(x, q)); };
  auto flat_ant = [&](const Antecedent& a) {
    if (const auto* pl = std::get_if<Literal>(&a)) return pflat(*pl);
    return mint(flat(a));
  };
  auto add_rule = [&](const std::string& source, std::string label, RuleKind kind,
                      std::vector<Antecedent> ants, Literal head) {
    if (source_labels.count(label) || !generated_labels.insert(label).second)
      throw Error("generated rule label '" + label + "' collides");
    out.provenance.emplace_back(source, label);
    arg.rules.push_back(make_rule(std::move(label), kind, std::move(ants), std::move(head)));
  };

  // (1) literal and OBL facts carry over; (2) each INT fact becomes a strict
  // rule with empty antecedent.
  for (const Fact& f : t.facts) {
    if (const auto* pl = std::get_if<Literal>(&f)) {
      arg.facts.push_back(pflat(*pl));
      continue;
    }
    const ModalLiteral& m = std::get<ModalLiteral>(f);
    if (m.modality == Modality::OBL) {
      arg.facts.push_back(modal_lit(Modality::OBL, m.literal));
    } else {
      std::string label = "r_" + pstr(m.literal);
      out.intention_rule_labels.push_back(label);
      add_rule("fact " + to_string(f), label, RuleKind::Strict, {},
               modal_lit(Modality::INT, m.literal));
    }
  }

  const Modality modal[2] = {Modality::OBL, Modality::INT};
  struct Family {
    std::vector<int> members;  // indices into arg.rules
  };
  std::map<std::string, Family> families;  // source label -> counterparts

  auto flat_ants = [&](const Rule& r) {
    std::vector<Antecedent> ants;
    for (const Antecedent& a : r.antecedents) ants.push_back(flat_ant(a));
    return ants;
  };
  auto moded_ants = [&](const Rule& r, Modality x) {
    std::vector<Antecedent> ants;
    for (const Antecedent& a : r.antecedents)
      ants.push_back(modal_lit(x, std::get<Literal>(a)));
    return ants;
  };

  for (const Rule& r : t.rules) {
    Family& fam = families[r.label];
    auto emit = [&](std::string label, RuleKind kind, std::vector<Antecedent> ants,
                    Literal head) {
      fam.members.push_back((int)arg.rules.size());
      add_rule(r.label, std::move(label), kind, std::move(ants), std::move(head));
    };
    Modality mode = *r.mode;
    // (3) the flattened rule itself, mode folded into the consequent.
    Literal fl_head = mode == Modality::BEL ? pflat(r.consequent)
                                            : modal_lit(mode, r.consequent);
    emit(r.label + "_fl", r.kind, flat_ants(r), fl_head);
    bool plain_body = std::all_of(r.antecedents.begin(), r.antecedents.end(),
                                  [](const Antecedent& a) {
                                    return std::holds_alternative<Literal>(a);
                                  });
    if (mode == Modality::BEL) {
      // (4) conversion copies for strict/defeasible belief rules over plain bodies.
      if (r.kind != RuleKind::Defeater && plain_body) {
        for (Modality x : modal) {
          std::string sx = x == Modality::OBL ? "Cvobl" : "Cvint";
          emit(r.label + "_" + sx, r.kind, moded_ants(r, x), modal_lit(x, r.consequent));
        }
        // (5) conversion into y attacking x through the mode conflict.
        emit(r.label + "_CvoblCfint", RuleKind::Defeater, moded_ants(r, Modality::OBL),
             modal_lit(Modality::INT, r.consequent));
        emit(r.label + "_CvintCfobl", RuleKind::Defeater, moded_ants(r, Modality::INT),
             modal_lit(Modality::OBL, r.consequent));
      }
      // (6) belief rules attack obligations and intentions when they fire.
      emit(r.label + "_Cfbelobl", RuleKind::Defeater, flat_ants(r),
           modal_lit(Modality::OBL, r.consequent));
      emit(r.label + "_Cfbelint", RuleKind::Defeater, flat_ants(r),
           modal_lit(Modality::INT, r.consequent));
    } else if (mode == Modality::OBL) {
      // (7) obligations prevail over conflicting intentions.
      emit(r.label + "_CfOI", RuleKind::Defeater, flat_ants(r),
           modal_lit(Modality::INT, r.consequent));
    }
  }

  // (8)-(10) one guard gadget per distinct negated modal antecedent: the
  // witness atom becomes defeasibly provable exactly when the flattened modal
  // literal is defeasibly rejected.
  std::vector<std::pair<Modality, Literal>> neg_ants;
  for (const Rule& r : t.rules) {
    for (const Antecedent& a : r.antecedents) {
      const auto* m = std::get_if<ModalLiteral>(&a);
      if (!m || !m->outer_negated) continue;
      std::pair<Modality, Literal> key{m->modality, m->literal};
      if (std::find(neg_ants.begin(), neg_ants.end(), key) == neg_ants.end())
        neg_ants.push_back(key);
    }
  }
  for (const auto& [x, q] : neg_ants) {
    std::string stem = prefix_of(x) + pstr(q);
    Literal guard = mint(Literal{guard_atom(x, q), false});
    std::string source = "antecedent !" + std::string(to_string(x)) + " " + to_string(q);
    add_rule(source, "dum_" + stem, RuleKind::Defeasible, {modal_lit(x, q)}, guard);
    add_rule(source, "dumneg_" + stem, RuleKind::Defeasible, {}, complement(guard));
    add_rule(source, "neg_" + stem, RuleKind::Defeasible, {complement(guard)},
             mint(Literal{witness_atom(x, q), false}));
    arg.superiority.emplace_back("dum_" + stem, "dumneg_" + stem);
  }

  // (11) lift >_soc (declared pairs plus the Cf-induced order of Def. 8) to
  // every counterpart pair with complementary heads.
  std::vector<std::pair<std::string, std::string>> source_pairs(t.superiority);
  std::map<std::string, const Rule*> by_label;
  for (const Rule& r : t.rules) by_label[r.label] = &r;
  auto cf_prevails = [&](Modality w, Modality l) {
    return std::find(t.conflicts.begin(), t.conflicts.end(), ModalityPair{w, l}) !=
           t.conflicts.end();
  };
  for (const Rule& w : t.rules)
    for (const Rule& l : t.rules)
      if (cf_prevails(*w.mode, *l.mode) && w.consequent == complement(l.consequent))
        source_pairs.emplace_back(w.label, l.label);

  std::set<SuperiorityPair> emitted;
  for (const auto& [wl, ll] : source_pairs) {
    auto wf = families.find(wl);
    auto lf = families.find(ll);
    if (wf == families.end() || lf == families.end()) continue;
    for (int wi : wf->second.members) {
      for (int li : lf->second.members) {
        const Rule& rw = arg.rules[wi];
        const Rule& rl = arg.rules[li];
        if (rw.consequent != complement(rl.consequent)) continue;
        if (emitted.insert({rw.label, rl.label}).second)
          arg.superiority.emplace_back(rw.label, rl.label);
      }
    }
  }

  for (const auto& name : minted)
    if (source_atoms.count(name))
      throw Error("flat atom name '" + name + "' collides with a source atom");

  {
    auto violations = validate_theory(arg);
    if (!violations.empty())
      throw Error("transformation produced an invalid theory: " + violations.front().message);
  }
  return out;
}

}  // namespace dfl
