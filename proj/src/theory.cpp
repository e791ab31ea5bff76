#include "dfl/theory.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dfl {

std::string_view arrow_of(RuleKind k) {
  switch (k) {
    case RuleKind::Strict: return "->";
    case RuleKind::Defeasible: return "=>";
    case RuleKind::Defeater: return "~>";
  }
  return "?";
}

namespace {

std::vector<Antecedent> dedupe(std::vector<Antecedent> ants) {
  std::vector<Antecedent> out;
  for (auto& a : ants) {
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(std::move(a));
  }
  return out;
}

}  // namespace

Rule make_rule(std::string label, RuleKind kind, std::vector<Antecedent> antecedents,
               Literal consequent) {
  return Rule{std::move(label), kind, std::nullopt, dedupe(std::move(antecedents)),
              std::move(consequent)};
}

Rule make_rule(std::string label, RuleKind kind, Modality mode,
               std::vector<Antecedent> antecedents, Literal consequent) {
  return Rule{std::move(label), kind, mode, dedupe(std::move(antecedents)),
              std::move(consequent)};
}

std::vector<ModalityPair> default_conversions() {
  return {{Modality::BEL, Modality::OBL}, {Modality::BEL, Modality::INT}};
}

std::vector<ModalityPair> default_conflicts() {
  return {{Modality::BEL, Modality::OBL},
          {Modality::BEL, Modality::INT},
          {Modality::OBL, Modality::INT}};
}

bool AgentTheory::has_default_relations() const {
  auto as_set = [](const std::vector<ModalityPair>& v) {
    return std::set<ModalityPair>(v.begin(), v.end());
  };
  return as_set(conversions) == as_set(default_conversions()) &&
         as_set(conflicts) == as_set(default_conflicts());
}

namespace {

struct Checker {
  std::vector<Violation> out;

  void add(std::string code, std::string message) {
    out.push_back(Violation{std::move(code), std::move(message)});
  }

  void check_atom(const Literal& l, const std::string& where) {
    if (!valid_atom(l.atom)) add("bad-atom", "invalid atom '" + l.atom + "' in " + where);
  }

  // Duplicate labels, dangling/irreflexive/cyclic superiority. Shared by both
  // dialects; returns label -> rule index for further checks.
  template <typename TheoryT>
  std::map<std::string, std::size_t> check_common(const TheoryT& t) {
    std::map<std::string, std::size_t> by_label;
    for (std::size_t i = 0; i < t.rules.size(); ++i) {
      const Rule& r = t.rules[i];
      if (!valid_atom(r.label)) add("bad-label", "invalid rule label '" + r.label + "'");
      if (!by_label.emplace(r.label, i).second)
        add("duplicate-label", "duplicate rule label '" + r.label + "'");
      check_atom(r.consequent, "rule " + r.label);
      for (const Antecedent& a : r.antecedents) {
        if (const auto* pl = std::get_if<Literal>(&a)) check_atom(*pl, "rule " + r.label);
        else check_atom(std::get<ModalLiteral>(a).literal, "rule " + r.label);
      }
    }
    std::set<SuperiorityPair> seen;
    for (const auto& [w, l] : t.superiority) {
      if (!by_label.count(w)) add("dangling-label", "superiority names unknown rule '" + w + "'");
      if (!by_label.count(l)) add("dangling-label", "superiority names unknown rule '" + l + "'");
      if (w == l) add("irreflexive", "rule '" + w + "' declared superior to itself");
      seen.insert({w, l});
    }
    // Cycle detection over the declared pairs (asymmetry is the 2-cycle case).
    std::map<std::string, std::vector<std::string>> adj;
    for (const auto& [w, l] : seen)
      if (w != l) adj[w].push_back(l);
    std::map<std::string, int> state;  // 0 new, 1 open, 2 done
    bool cyclic = false;
    auto dfs = [&](auto&& self, const std::string& v) -> void {
      state[v] = 1;
      for (const auto& n : adj[v]) {
        if (state[n] == 1) { cyclic = true; return; }
        if (state[n] == 0) self(self, n);
        if (cyclic) return;
      }
      state[v] = 2;
    };
    for (const auto& [v, _] : adj) {
      if (state[v] == 0) dfs(dfs, v);
      if (cyclic) break;
    }
    if (cyclic) add("acyclic", "superiority relation contains a cycle");
    return by_label;
  }
};

bool cf_contains(const std::vector<ModalityPair>& cf, Modality winner, Modality loser) {
  return std::find(cf.begin(), cf.end(), ModalityPair{winner, loser}) != cf.end();
}

}  // namespace

std::vector<Violation> validate_theory(const ArgTheory& t) {
  Checker c;
  c.check_common(t);
  for (const Literal& f : t.facts) c.check_atom(f, "facts");
  for (const Rule& r : t.rules) {
    if (r.mode) c.add("mixed-dialect", "rule '" + r.label + "' carries a mode in an argumentation theory");
    for (const Antecedent& a : r.antecedents) {
      if (std::holds_alternative<ModalLiteral>(a))
        c.add("mixed-dialect", "rule '" + r.label + "' has a modal antecedent in an argumentation theory");
    }
  }
  return c.out;
}

std::vector<Violation> validate_theory(const AgentTheory& t) {
  Checker c;
  auto by_label = c.check_common(t);
  for (const Fact& f : t.facts) {
    if (const auto* pl = std::get_if<Literal>(&f)) {
      c.check_atom(*pl, "facts");
    } else {
      const ModalLiteral& m = std::get<ModalLiteral>(f);
      c.check_atom(m.literal, "facts");
      if (m.outer_negated)
        c.add("negated-modal-fact", "fact '" + to_string(m) + "' carries outer negation");
      if (m.modality == Modality::BEL)
        c.add("bel-modal", "belief facts are written as bare literals, got '" + to_string(m) + "'");
    }
  }
  for (const Rule& r : t.rules) {
    if (!r.mode) {
      c.add("mixed-dialect", "rule '" + r.label + "' lacks a mode in an agent theory");
      continue;
    }
    for (const Antecedent& a : r.antecedents) {
      if (const auto* m = std::get_if<ModalLiteral>(&a)) {
        if (m->modality == Modality::BEL)
          c.add("bel-modal", "rule '" + r.label + "' uses BEL as a modal prefix");
      }
    }
  }
  // Declared pairs must stay within one mode unless they merely restate the
  // Cf-induced order (same pair with complementary heads).
  for (const auto& [w, l] : t.superiority) {
    auto wi = by_label.find(w);
    auto li = by_label.find(l);
    if (wi == by_label.end() || li == by_label.end()) continue;
    const Rule& rw = t.rules[wi->second];
    const Rule& rl = t.rules[li->second];
    if (!rw.mode || !rl.mode || *rw.mode == *rl.mode) continue;
    bool sanctioned = cf_contains(t.conflicts, *rw.mode, *rl.mode) &&
                      rw.consequent == complement(rl.consequent);
    if (!sanctioned)
      c.add("cross-mode-superiority",
            "superiority pair " + w + " > " + l + " relates rules of different modes");
  }
  return c.out;
}

namespace {

template <typename TheoryT>
std::size_t size_of(const TheoryT& t) {
  std::size_t n = t.facts.size() + t.superiority.size();
  for (const Rule& r : t.rules) n += 1 + r.antecedents.size();
  return n;
}

}  // namespace

std::size_t theory_size(const ArgTheory& t) { return size_of(t); }
std::size_t theory_size(const AgentTheory& t) { return size_of(t); }

}  // namespace dfl
