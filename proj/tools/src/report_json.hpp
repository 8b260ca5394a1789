#pragma once

#include <nlohmann/json.hpp>
#include <string>

#include "commands.hpp"

namespace cli {

std::string sha256_file(const std::string& path);

// {command, inputs, caps, status, counts, violations, wall_time_ms}
nlohmann::json to_json(const Outcome& o, const Caps& caps, const std::string& status, double wall_ms);
std::string to_text(const nlohmann::json& report);

}  // namespace cli
