#pragma once

// nlohmann::json conversions shared by config_io.cpp and bench.cpp. Kept out
// of the public headers.

#include "lcvwm/codec.hpp"
#include "lcvwm/complexity.hpp"

#include <json.hpp>

namespace lcvwm::detail {

using Json = nlohmann::ordered_json;

Json to_json(const EmbedConfig& config);
Json to_json(const DatasetStats& stats);
Json to_json(const ReplicationPlan& plan);
Json to_json(const ScaleReport& report);

/// Finite doubles as numbers, non-finite as null.
Json number(double v);

}  // namespace lcvwm::detail
