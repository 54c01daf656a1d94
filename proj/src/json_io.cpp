#include "lpenv/json_io.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace lpenv {

nlohmann::json number_to_json(double value) {
    if (std::isnan(value)) return "nan";
    if (std::isinf(value)) return value > 0.0 ? "inf" : "-inf";
    return value;
}

nlohmann::json to_json(const StepFunction& f) {
    nlohmann::json values = nlohmann::json::array();
    for (double v : f.values()) values.push_back(number_to_json(v));
    return {{"breakpoints", f.breakpoints()}, {"values", values}};
}

StepFunction step_function_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("breakpoints") || !j.contains("values")) {
        throw std::invalid_argument("step function JSON needs \"breakpoints\" and \"values\"");
    }
    const auto& jb = j.at("breakpoints");
    const auto& jv = j.at("values");
    if (!jb.is_array() || !jv.is_array()) {
        throw std::invalid_argument("\"breakpoints\" and \"values\" must be arrays");
    }
    std::vector<double> breakpoints;
    for (const auto& b : jb) {
        if (!b.is_number()) throw std::invalid_argument("breakpoints must be numbers");
        breakpoints.push_back(b.get<double>());
    }
    std::vector<double> values;
    for (const auto& v : jv) {
        if (v.is_number()) {
            values.push_back(v.get<double>());
        } else if (v.is_string() && v.get<std::string>() == "inf") {
            values.push_back(std::numeric_limits<double>::infinity());
        } else {
            throw std::invalid_argument("values must be numbers or \"inf\"");
        }
    }
    return StepFunction(std::move(breakpoints), std::move(values));
}

nlohmann::json to_json(const ConeTriple& t) {
    return {{"x", t.x()}, {"y", t.y()}, {"z", t.z()}};
}

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json j;
    j["p"] = r.p;
    j["triple"] = to_json(r.triple);
    j["actual"] = r.has_actual ? number_to_json(r.actual) : nlohmann::json(nullptr);
    j["upper"] = number_to_json(r.upper);
    j["lower"] = number_to_json(r.lower);
    j["carlen"] = number_to_json(r.carlen);
    j["carlen_direction"] = r.carlen_upper ? "upper" : "lower";
    nlohmann::json margins;
    if (r.has_actual) {
        margins["upper"] = number_to_json(r.upper_margin);
        margins["lower"] = number_to_json(r.lower_margin);
        margins["carlen"] = number_to_json(r.carlen_margin);
    } else {
        margins["envelope_order"] = number_to_json(r.upper_margin);
        margins["refinement"] = number_to_json(r.carlen_margin);
    }
    j["margins"] = margins;
    j["worst_margin"] = number_to_json(r.worst_margin());
    return j;
}

}  // namespace lpenv
