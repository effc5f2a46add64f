#pragma once

#include <string>

#include "burst/channel.hpp"
#include "burst/codes.hpp"
#include "json.hpp"

namespace burst {

nlohmann::json event_to_json(const BurstEvent& e);
BurstEvent event_from_json(const nlohmann::json& j);

/// {"family", "n", "q", "t", "s", "P", "residues": {...}}
nlohmann::json instance_to_json(const CodeInstance& code);
CodeInstance instance_from_json(const nlohmann::json& j);
CodeInstance read_instance_file(const std::string& path);

}  // namespace burst
