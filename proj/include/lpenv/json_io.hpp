#pragma once

#include <json.hpp>

#include "lpenv/step_function.hpp"

namespace lpenv {

/// {"breakpoints": [...], "values": [...]}, with the string "inf" for +inf.
nlohmann::json to_json(const StepFunction& f);
/// Throws std::invalid_argument on malformed input.
StepFunction step_function_from_json(const nlohmann::json& j);

nlohmann::json to_json(const ConeTriple& t);
nlohmann::json to_json(const BoundReport& report);

/// Numbers as JSON, but non-finite values as the strings "inf", "-inf", "nan".
nlohmann::json number_to_json(double value);

}  // namespace lpenv
