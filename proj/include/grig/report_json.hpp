#pragma once

#include <json.hpp>

#include "grig/verify.hpp"

namespace grig {

inline nlohmann::json report_to_json(const VerificationReport& r, bool with_timing = false) {
    nlohmann::json j;
    j["suite"] = r.suite;
    j["passed"] = r.passed();
    j["instances"] = r.instances;
    j["violations"] = nlohmann::json::array();
    for (const auto& v : r.violations)
        j["violations"].push_back({{"witness", v.witness}, {"expected", v.expected}, {"actual", v.actual}});
    j["findings"] = r.findings;
    if (with_timing) j["elapsed_seconds"] = r.elapsed_seconds;
    return j;
}

}  // namespace grig
