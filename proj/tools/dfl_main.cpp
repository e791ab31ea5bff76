#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "dfl/parser.hpp"
#include "dfl/serialize.hpp"
#include "dfl/strategy.hpp"

using namespace dfl;

namespace {

constexpr int kYes = 0;
constexpr int kNo = 1;
constexpr int kError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

Literal parse_literal_arg(const std::string& text) {
  bool neg = !text.empty() && text[0] == '~';
  std::string atom = neg ? text.substr(1) : text;
  if (!valid_atom(atom)) throw Error("invalid literal '" + text + "'");
  return Literal{atom, neg};
}

int require_valid(const ParsedTheory& parsed) {
  std::vector<Violation> violations = std::holds_alternative<AgentTheory>(parsed)
                                          ? validate_theory(std::get<AgentTheory>(parsed))
                                          : validate_theory(std::get<ArgTheory>(parsed));
  for (const auto& v : violations)
    std::cerr << "violation [" << v.code << "] " << v.message << "\n";
  return violations.empty() ? kYes : kError;
}

int cmd_validate(const std::string& path) {
  ParsedTheory parsed = parse_theory(read_input(path));
  std::vector<Violation> violations = std::holds_alternative<AgentTheory>(parsed)
                                          ? validate_theory(std::get<AgentTheory>(parsed))
                                          : validate_theory(std::get<ArgTheory>(parsed));
  for (const auto& v : violations)
    std::cerr << "violation [" << v.code << "] " << v.message << "\n";
  if (violations.empty()) {
    std::cout << "valid\n";
    return kYes;
  }
  return kNo;
}

int cmd_extend(const std::string& path, bool json) {
  ParsedTheory parsed = parse_theory(read_input(path));
  if (int rc = require_valid(parsed); rc != kYes) return rc;
  if (const auto* agent = std::get_if<AgentTheory>(&parsed)) {
    ModalExtension ext = compute_bio_extension(*agent);
    for (const auto& w : ext.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << (json ? extension_to_json(ext).dump(2) + "\n" : extension_to_table(ext));
  } else {
    Extension ext = compute_extension(std::get<ArgTheory>(parsed));
    for (const auto& w : ext.warnings) std::cerr << "warning: " << w << "\n";
    std::cout << (json ? extension_to_json(ext).dump(2) + "\n" : extension_to_table(ext));
  }
  return kYes;
}

int cmd_flatten(const std::string& path, bool with_map) {
  ParsedTheory parsed = parse_theory(read_input(path));
  if (int rc = require_valid(parsed); rc != kYes) return rc;
  const auto* agent = std::get_if<AgentTheory>(&parsed);
  if (!agent) throw Error("flatten expects an agent theory");
  TransformResult tr = transform_theory(*agent);
  std::cout << to_dfl(tr.theory);
  if (with_map) {
    std::cout << "# label provenance\n";
    for (const auto& [source, label] : tr.provenance)
      std::cout << "# map: " << source << " -> " << label << "\n";
  }
  return kYes;
}

int cmd_play(const std::string& path, const std::string& pr, const std::string& op,
             const std::string& trace_path) {
  GameDocument doc = parse_game(read_input(path));
  auto prs = strategy_by_name(pr);
  auto ops = strategy_by_name(op);
  if (!prs || !ops) throw Error("unknown strategy; use minimal, maximal or exhaustive");
  Transcript t = run_game(doc.parts, doc.config, *prs, *ops);
  for (const TranscriptMove& m : t.moves) {
    std::cout << "turn " << m.turn << " " << to_string(m.player) << " "
              << to_string(m.move) << (m.forfeit ? " (forfeit)" : "") << "  goal "
              << status_char(m.goal_partial) << " complement "
              << status_char(m.complement_partial) << "\n";
  }
  std::cout << "result: " << (t.aborted ? "aborted" : to_string(t.result)) << "\n";
  if (!trace_path.empty()) {
    std::ofstream out(trace_path);
    if (!out) throw Error("cannot write '" + trace_path + "'");
    out << transcript_to_json(t).dump(2) << "\n";
  }
  return kYes;
}

int cmd_move(const std::string& path, const std::string& player, const std::string& order,
             bool oracle, bool stats) {
  GameDocument doc = parse_game(read_input(path));
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
  if (stats)
    std::cerr << "nodes: " << r.nodes_explored << " elapsed: " << r.elapsed.count() << "s\n";
  if (!r.found) {
    std::cout << "no winning move\n";
    return kNo;
  }
  for (std::size_t i = 0; i < r.witness.size(); ++i)
    std::cout << (i ? " " : "") << r.witness[i];
  std::cout << "\n";
  return kYes;
}

int cmd_sociality(const std::string& path, const std::string& obligation, bool via_game,
                  const std::string& filter, bool stats) {
  ParsedTheory parsed = parse_theory(read_input(path));
  if (int rc = require_valid(parsed); rc != kYes) return rc;
  const auto* agent = std::get_if<AgentTheory>(&parsed);
  if (!agent) throw Error("sociality expects an agent theory");
  SocialityInstance inst = make_sociality_instance(*agent, parse_literal_arg(obligation));
  InstanceReport report = check_sociality_instance(inst);
  for (const auto& c : report.conditions)
    std::cout << (c.holds ? "holds " : "fails ") << c.name << "\n";
  if (!report.well_posed) {
    std::cerr << (report.conditions_hold ? "no primitive intentions: ill-posed instance\n"
                                         : "instance conditions fail\n");
    return kError;
  }
  if (via_game) {
    MoveSearchResult r = solve_via_game(inst, filter != "off");
    if (stats) std::cerr << "nodes: " << r.nodes_explored << "\n";
    if (!r.found) {
      std::cout << "no\n";
      return kNo;
    }
    std::cout << "witness:";
    for (const auto& l : r.witness) std::cout << " " << l;
    std::cout << "\n";
    return kYes;
  }
  SocialityResult r = solve_restoring_sociality(inst);
  if (stats) std::cerr << "nodes: " << r.nodes_explored << "\n";
  if (!r.found) {
    std::cout << "no\n";
    return kNo;
  }
  std::cout << "kept intentions:";
  for (const auto& l : r.kept_intentions) std::cout << " " << to_string(l);
  std::cout << "\n";
  return kYes;
}

int cmd_reduce(const std::string& path, const std::string& obligation) {
  ParsedTheory parsed = parse_theory(read_input(path));
  if (int rc = require_valid(parsed); rc != kYes) return rc;
  const auto* agent = std::get_if<AgentTheory>(&parsed);
  if (!agent) throw Error("reduce expects an agent theory");
  ReducedGame game =
      reduce_sociality_to_game(make_sociality_instance(*agent, parse_literal_arg(obligation)));
  std::cout << to_game_file(game.parts, game.config);
  return kYes;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"defeasible logic engines, dialogue games and strategy solvers"};
  app.require_subcommand(1);

  std::string path, player = "pr", order = "minimal", pr = "exhaustive", op = "exhaustive";
  std::string trace_path, obligation, filter = "on";
  bool json = false, with_map = false, oracle = false, stats = false, via_game = false;

  auto* validate = app.add_subcommand("validate", "check a theory file");
  validate->add_option("file", path, "theory file or -")->required();

  auto* extend = app.add_subcommand("extend", "compute the extension of a theory");
  extend->add_option("file", path, "theory file or -")->required();
  extend->add_flag("--json", json, "machine-readable output");

  auto* flatten = app.add_subcommand("flatten", "translate an agent theory");
  flatten->add_option("file", path, "theory file or -")->required();
  flatten->add_flag("--map", with_map, "emit the label provenance table");

  auto* play = app.add_subcommand("play", "play out a dialogue game");
  play->add_option("file", path, "game file or -")->required();
  play->add_option("--pr", pr, "proponent strategy");
  play->add_option("--op", op, "opponent strategy");
  play->add_option("--trace", trace_path, "write the JSON transcript here");

  auto* move = app.add_subcommand("move", "search a winning move");
  move->add_option("file", path, "game file or -")->required();
  move->add_option("--player", player, "pr or op")->required()
      ->check(CLI::IsMember({"pr", "op"}));
  move->add_option("--order", order, "minimal or maximal")
      ->check(CLI::IsMember({"minimal", "maximal"}));
  move->add_flag("--oracle", oracle, "force the unpruned enumerator");
  move->add_flag("--stats", stats, "report nodes and time on stderr");

  auto* sociality = app.add_subcommand("sociality", "check and solve a sociality instance");
  sociality->add_option("file", path, "agent theory file or -")->required();
  sociality->add_option("--obligation", obligation, "the primary obligation literal")
      ->required();
  sociality->add_flag("--via-game", via_game, "solve through the game reduction");
  sociality->add_option("--filter-obligations", filter, "on or off (with --via-game)")
      ->check(CLI::IsMember({"on", "off"}));
  sociality->add_flag("--stats", stats, "report nodes on stderr");

  auto* reduce = app.add_subcommand("reduce", "emit the sociality-to-game reduction");
  reduce->add_option("file", path, "agent theory file or -")->required();
  reduce->add_option("--obligation", obligation, "the primary obligation literal")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(path);
    if (extend->parsed()) return cmd_extend(path, json);
    if (flatten->parsed()) return cmd_flatten(path, with_map);
    if (play->parsed()) return cmd_play(path, pr, op, trace_path);
    if (move->parsed()) return cmd_move(path, player, order, oracle, stats);
    if (sociality->parsed()) return cmd_sociality(path, obligation, via_game, filter, stats);
    if (reduce->parsed()) return cmd_reduce(path, obligation);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
