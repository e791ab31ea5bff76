#include "dfl/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace dfl {

namespace {

std::string rule_line(const Rule& r) {
  std::string out = "rule " + r.label;
  if (r.mode) out += "[" + std::string(to_string(*r.mode)) + "]";
  out += ":";
  for (std::size_t i = 0; i < r.antecedents.size(); ++i)
    out += (i ? ", " : " ") + to_string(r.antecedents[i]);
  out += " ";
  out += arrow_of(r.kind);
  out += " " + to_string(r.consequent) + ".";
  return out;
}

template <typename FactT>
void emit_statements(std::ostringstream& os, const std::vector<FactT>& facts,
                     const std::vector<Rule>& rules,
                     const std::vector<SuperiorityPair>& superiority) {
  std::vector<std::string> lines;
  for (const auto& f : facts) lines.push_back("fact " + to_string(f) + ".");
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << "\n";

  lines.clear();
  for (const Rule& r : rules) lines.push_back(rule_line(r));
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << "\n";

  lines.clear();
  for (const auto& [w, l] : superiority) lines.push_back("sup " + w + " > " + l + ".");
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << "\n";
}

}  // namespace

std::string to_dfl(const ArgTheory& t) {
  std::ostringstream os;
  emit_statements(os, t.facts, t.rules, t.superiority);
  return os.str();
}

std::string to_dfl(const AgentTheory& t) {
  std::ostringstream os;
  emit_statements(os, t.facts, t.rules, t.superiority);
  return os.str();
}

std::string to_game_file(const GameParts& parts, const GameConfig& config) {
  std::ostringstream os;
  os << "goal " << to_string(config.goal) << ".\n";
  os << "mode " << to_string(config.win_mode) << ".\n";
  std::vector<std::string> lines;
  for (const auto& f : parts.facts) lines.push_back("fact " + to_string(f) + ".");
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << "\n";
  auto section = [&](const char* name, const std::vector<Rule>& rules) {
    if (rules.empty()) return;
    os << "@" << name << "\n";
    std::vector<std::string> rl;
    for (const Rule& r : rules) rl.push_back(rule_line(r));
    std::sort(rl.begin(), rl.end());
    for (const auto& l : rl) os << l << "\n";
  };
  section("common", parts.common);
  section("proponent", parts.pr_private);
  section("opponent", parts.op_private);
  lines.clear();
  for (const auto& [w, l] : parts.superiority) lines.push_back("sup " + w + " > " + l + ".");
  std::sort(lines.begin(), lines.end());
  for (const auto& l : lines) os << l << "\n";
  return os.str();
}

nlohmann::ordered_json extension_to_json(const Extension& ext) {
  std::vector<std::pair<std::string, LiteralTags>> rows;
  for (const auto& [literal, tags] : ext.entries) rows.emplace_back(to_string(literal), tags);
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, tags] : rows) {
    out[key] = {{"delta", std::string(1, status_char(tags.delta))},
                {"partial", std::string(1, status_char(tags.partial))}};
  }
  return out;
}

nlohmann::ordered_json extension_to_json(const ModalExtension& ext) {
  std::vector<std::pair<std::string, ModalTags>> rows;
  for (const auto& [key, tags] : ext.entries) {
    std::string name = std::string(to_string(key.first)) + " " + to_string(key.second);
    rows.emplace_back(std::move(name), tags);
  }
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  nlohmann::ordered_json out = nlohmann::ordered_json::object();
  for (const auto& [key, tags] : rows) {
    out[key] = {{"delta", std::string(1, status_char(tags.delta))},
                {"partial", std::string(1, status_char(tags.partial))},
                {"support", std::string(1, status_char(tags.support))}};
  }
  return out;
}

std::string extension_to_table(const Extension& ext) {
  std::ostringstream os;
  os << "literal\tdelta\tpartial\n";
  auto json = extension_to_json(ext);
  for (auto& [key, value] : json.items())
    os << key << "\t" << value["delta"].get<std::string>() << "\t"
       << value["partial"].get<std::string>() << "\n";
  return os.str();
}

std::string extension_to_table(const ModalExtension& ext) {
  std::ostringstream os;
  os << "literal\tdelta\tpartial\tsupport\n";
  auto json = extension_to_json(ext);
  for (auto& [key, value] : json.items())
    os << key << "\t" << value["delta"].get<std::string>() << "\t"
       << value["partial"].get<std::string>() << "\t" << value["support"].get<std::string>()
       << "\n";
  return os.str();
}

nlohmann::ordered_json transcript_to_json(const Transcript& t) {
  nlohmann::ordered_json out;
  out["goal"] = to_string(t.config.goal);
  out["win_mode"] = std::string(to_string(t.config.win_mode));
  out["moves"] = nlohmann::ordered_json::array();
  for (const TranscriptMove& m : t.moves) {
    nlohmann::ordered_json move;
    move["turn"] = m.turn;
    move["player"] = std::string(to_string(m.player));
    if (m.move.is_pass()) move["move"] = "pass";
    else move["move"] = m.move.labels;
    move["goal_status"] = {
        {"partial", std::string(1, status_char(m.goal_partial))},
        {"complement_partial", std::string(1, status_char(m.complement_partial))}};
    if (m.forfeit) move["forfeit"] = true;
    out["moves"].push_back(std::move(move));
  }
  out["result"] = t.aborted ? "aborted" : std::string(to_string(t.result));
  return out;
}

}  // namespace dfl
