#pragma once

#include <json.hpp>

#include <string>

#include "stacky/fan.hpp"

namespace stacky {

using Json = nlohmann::ordered_json;

// Schema: {"rank": int, "rays": [[int,...],...], "max_cones": [[int,...],...]}
// plus an optional "name".  Anything else is rejected.
FanCandidate fan_candidate_from_json(const Json& j);
Json fan_to_json(const StackyFan& f, const std::string& name = "");
FanCandidate load_fan_file(const std::string& path);

} // namespace stacky
