#pragma once
// The state document: a single JSON text with fields
//   code      -- "unknot" or a PD code as an array of 4-element rows
//   punctures -- labeled map {"p0": face, ...} or a plain list of face ids
//   meta      -- optional free-form object (name, known crossing number, ...)
// All CLI commands accept and emit this format.

#include <json.hpp>

#include "knotsphere/moves.hpp"
#include "knotsphere/search.hpp"
#include "knotsphere/state.hpp"

namespace knotsphere {

using Json = nlohmann::ordered_json;

struct StateDoc {
  PuncturedState state;
  Json meta;  // null when absent
};

StateDoc parse_state_doc(const std::string& text);
std::string serialize_state_doc(const StateDoc& doc, bool canonical = false);

Json move_to_json(const Move& m);
Move move_from_json(const Json& j);

Json result_to_json(const CrossingResult& r);
Json profile_to_json(const Profile& p);
std::string threshold_to_string(const Threshold& t);

}  // namespace knotsphere
