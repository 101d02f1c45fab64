#pragma once

#include <json.hpp>

#include "ifwar/scenario.hpp"

namespace ifwar::detail {

ThreatConfig parse_threat_config(const nlohmann::json& j);
Polarity polarity_from_string(const std::string& s);

}  // namespace ifwar::detail
