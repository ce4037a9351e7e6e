#pragma once

#include <string>

#include <json.hpp>

#include "sachs/integer.hpp"
#include "sachs/verify.hpp"

namespace sachs {

using Json = nlohmann::ordered_json;

// Integers that fit int64 are JSON numbers; larger ones are decimal strings.
Json to_json(Integer v);
Json to_json(const ExtremalReport& r);
Json to_json(const CheckResult& r);

// {"command", "params", "status", "results", "minimizers", "wall_time_ms"}
Json report_document(const std::string& command, Json params, const std::string& status, Json results,
                     Json minimizers, double wall_time_ms);

}  // namespace sachs
