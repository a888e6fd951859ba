#pragma once

#include <cstdint>
#include <set>
#include <string>

#include <json.hpp>

#include "jelonek/polymap.hpp"

namespace jelonek {

using Json = nlohmann::ordered_json;

struct RunConfig {
    enum class Mode { exact, ball };
    Mode mode = Mode::exact;
    long precision = 256;
    long max_order = 0;  // 0: derived from the degrees
    long depth_cap = 0;  // 0: 4 (deg P + deg Q)
    double tol = 0x1p-128;
    uint64_t seed = 1;
    std::set<std::string> stages;  // empty: all stages

    void validate() const;  // throws input_error
    bool wants(const std::string& stage) const;
};

struct RunReport {
    Json doc;
    int exit_code = 0;  // 0 pass, 1 check failure, 2 input error, 3 resource
};

// Full pipeline over an input document {"P": "...", "Q": "...",
// "vars": ["x","y"]?}. Stage errors abort downstream stages but keep the
// upstream sections in the report.
RunReport run_pipeline(const Json& input, const RunConfig& cfg);

// Human-readable rendering of a report document.
std::string render_text(const Json& doc);

} // namespace jelonek
