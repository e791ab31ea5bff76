#pragma once

#include <string>

#include <json.hpp>

#include "dfl/bio.hpp"
#include "dfl/engine.hpp"
#include "dfl/game.hpp"
#include "dfl/theory.hpp"

namespace dfl {

// Normalized text forms: facts, rules and superiority pairs each sorted, one
// statement per line. parse(to_dfl(t)) == normalized t.
std::string to_dfl(const ArgTheory& t);
std::string to_dfl(const AgentTheory& t);
std::string to_game_file(const GameParts& parts, const GameConfig& config);

nlohmann::ordered_json extension_to_json(const Extension& ext);
nlohmann::ordered_json extension_to_json(const ModalExtension& ext);
std::string extension_to_table(const Extension& ext);
std::string extension_to_table(const ModalExtension& ext);

nlohmann::ordered_json transcript_to_json(const Transcript& t);

}  // namespace dfl
