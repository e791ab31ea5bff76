#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "dfl/parser.hpp"
#include "dfl/serialize.hpp"
#include "dfl/strategy.hpp"

namespace py = pybind11;
using namespace dfl;

namespace {

py::object json_to_py(const nlohmann::ordered_json& j) {
  py::object loads = py::module_::import("json").attr("loads");
  return loads(j.dump());
}

ParsedTheory parse_or_throw(const std::string& text) { return parse_theory(text); }

py::dict extend_text(const std::string& text) {
  ParsedTheory parsed = parse_or_throw(text);
  py::dict out;
  if (const auto* agent = std::get_if<AgentTheory>(&parsed)) {
    out["dialect"] = "agent";
    out["extension"] = json_to_py(extension_to_json(compute_bio_extension(*agent)));
  } else {
    out["dialect"] = "argumentation";
    out["extension"] =
        json_to_py(extension_to_json(compute_extension(std::get<ArgTheory>(parsed))));
  }
  return out;
}

std::string flatten_text(const std::string& text) {
  ParsedTheory parsed = parse_or_throw(text);
  const auto* agent = std::get_if<AgentTheory>(&parsed);
  if (!agent) throw Error("flatten expects an agent theory");
  return to_dfl(transform_theory(*agent).theory);
}

std::vector<std::string> validate_text(const std::string& text) {
  ParsedTheory parsed = parse_or_throw(text);
  std::vector<Violation> violations = std::holds_alternative<AgentTheory>(parsed)
                                          ? validate_theory(std::get<AgentTheory>(parsed))
                                          : validate_theory(std::get<ArgTheory>(parsed));
  std::vector<std::string> out;
  for (const auto& v : violations) out.push_back(v.code + ": " + v.message);
  return out;
}

py::dict play_text(const std::string& text, const std::string& pr, const std::string& op) {
  GameDocument doc = parse_game(text);
  auto prs = strategy_by_name(pr);
  auto ops = strategy_by_name(op);
  if (!prs || !ops) throw Error("unknown strategy; use minimal, maximal or exhaustive");
  Transcript t = run_game(doc.parts, doc.config, *prs, *ops);
  py::dict out;
  out["transcript"] = json_to_py(transcript_to_json(t));
  out["result"] = std::string(to_string(t.result));
  return out;
}

py::dict move_text(const std::string& text, const std::string& player,
                   const std::string& order, bool oracle) {
  GameDocument doc = parse_game(text);
  GameState state = new_game(doc.parts, doc.config);
  Player who = player == "pr" ? Player::Proponent : Player::Opponent;
  MoveSearchResult r;
  if (oracle) {
    r = oracle_winning_move(state, who);
  } else {
    SearchOptions opt;
    opt.order = order == "maximal" ? SearchOrder::MaximalFirst : SearchOrder::MinimalFirst;
    r = find_winning_move(state, who, opt);
  }
  py::dict out;
  out["found"] = r.found;
  out["witness"] = r.witness;
  out["nodes_explored"] = r.nodes_explored;
  return out;
}

py::dict sociality_text(const std::string& text, const std::string& obligation,
                        bool via_game, bool filter_obligations) {
  ParsedTheory parsed = parse_or_throw(text);
  const auto* agent = std::get_if<AgentTheory>(&parsed);
  if (!agent) throw Error("sociality expects an agent theory");
  bool neg = !obligation.empty() && obligation[0] == '~';
  Literal p{neg ? obligation.substr(1) : obligation, neg};
  SocialityInstance inst = make_sociality_instance(*agent, p);
  InstanceReport report = check_sociality_instance(inst);
  py::dict out;
  py::list conds;
  for (const auto& c : report.conditions) {
    py::dict row;
    row["condition"] = c.name;
    row["holds"] = c.holds;
    conds.append(row);
  }
  out["conditions"] = conds;
  out["well_posed"] = report.well_posed;
  if (!report.well_posed) {
    out["found"] = false;
    return out;
  }
  if (via_game) {
    MoveSearchResult r = solve_via_game(inst, filter_obligations);
    out["found"] = r.found;
    out["witness"] = r.witness;
  } else {
    SocialityResult r = solve_restoring_sociality(inst);
    out["found"] = r.found;
    std::vector<std::string> kept;
    for (const auto& l : r.kept_intentions) kept.push_back(to_string(l));
    out["kept_intentions"] = kept;
  }
  return out;
}

std::string reduce_text(const std::string& text, const std::string& obligation) {
  ParsedTheory parsed = parse_or_throw(text);
  const auto* agent = std::get_if<AgentTheory>(&parsed);
  if (!agent) throw Error("reduce expects an agent theory");
  bool neg = !obligation.empty() && obligation[0] == '~';
  Literal p{neg ? obligation.substr(1) : obligation, neg};
  ReducedGame game = reduce_sociality_to_game(make_sociality_instance(*agent, p));
  return to_game_file(game.parts, game.config);
}

}  // namespace

PYBIND11_MODULE(dflpy, m) {
  m.doc() = "Defeasible logic engines, dialogue games and strategy solvers";

  py::register_exception<Error>(m, "DflError");

  m.def("extend", &extend_text, py::arg("text"),
        "Parse a theory (auto dialect) and return its extension.");
  m.def("flatten", &flatten_text, py::arg("text"),
        "Translate an agent theory into its argumentation counterpart.");
  m.def("validate", &validate_text, py::arg("text"),
        "Return the list of validation violations (empty when valid).");
  m.def("play", &play_text, py::arg("text"), py::arg("pr") = "exhaustive",
        py::arg("op") = "exhaustive", "Play out a game file; returns the transcript.");
  m.def("move", &move_text, py::arg("text"), py::arg("player"), py::arg("order") = "minimal",
        py::arg("oracle") = false, "Search a winning move on a game file's initial state.");
  m.def("sociality", &sociality_text, py::arg("text"), py::arg("obligation"),
        py::arg("via_game") = false, py::arg("filter_obligations") = true,
        "Check and solve a restoring-sociality instance.");
  m.def("reduce", &reduce_text, py::arg("text"), py::arg("obligation"),
        "Emit the game file of the sociality-to-game reduction.");
  m.def("theory_size", [](const std::string& text) {
    ParsedTheory parsed = parse_or_throw(text);
    return std::holds_alternative<AgentTheory>(parsed)
               ? theory_size(std::get<AgentTheory>(parsed))
               : theory_size(std::get<ArgTheory>(parsed));
  });
}
