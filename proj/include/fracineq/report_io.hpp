#pragma once

#include <cstdio>
#include <string>

#include <json.hpp>

#include "inequalities.hpp"

namespace fracineq {

inline constexpr const char* k_report_schema = "fracineq-report-v1";
inline constexpr const char* k_sweep_schema = "fracineq-sweep-v1";
inline constexpr const char* k_constants_schema = "fracineq-constants-v1";
inline constexpr const char* k_limits_schema = "fracineq-limits-v1";

/// 17 significant digits, scientific: lossless round-trip for doubles.
inline std::string fmt_sci(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return buf;
}

/// RFC-4180-style quoting: quote when a field contains comma/quote/newline.
inline std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

inline nlohmann::json report_to_json(const InequalityReport& r) {
    nlohmann::json terms = nlohmann::json::array();
    for (const auto& t : r.terms) terms.push_back({{"name", t.name}, {"value", t.value}});
    return nlohmann::json{{"schema", k_report_schema},
                          {"inequality", ineq_name(r.name)},
                          {"alpha", r.alpha},
                          {"a", r.interval.a},
                          {"b", r.interval.b},
                          {"A", r.A},
                          {"shape", shape_name(r.shape)},
                          {"terms", terms},
                          {"slacks", r.slacks},
                          {"margin", r.margin},
                          {"est_error_sum", r.est_error_sum},
                          {"panels_used", r.panels_used},
                          {"verdict", verdict_name(r.verdict)}};
}

inline std::string sweep_csv_header() {
    return "inequality,seed,family,alpha,A,a,b,term0,term1,term2,slack0,slack1,margin,verdict,"
           "panels_used";
}

/// One sweep row; status overrides the verdict column for screen failures.
inline std::string sweep_csv_row(const InequalityReport& r, std::uint64_t seed,
                                 const std::string& family, const std::string& status = "") {
    std::string row;
    row += ineq_name(r.name);
    row += ',' + std::to_string(seed);
    row += ',' + csv_quote(family);
    row += ',' + fmt_sci(r.alpha);
    row += ',' + fmt_sci(r.A);
    row += ',' + fmt_sci(r.interval.a);
    row += ',' + fmt_sci(r.interval.b);
    for (std::size_t i = 0; i < 3; ++i)
        row += ',' + (i < r.terms.size() ? fmt_sci(r.terms[i].value) : std::string());
    for (std::size_t i = 0; i < 2; ++i)
        row += ',' + (i < r.slacks.size() ? fmt_sci(r.slacks[i]) : std::string());
    row += ',' + fmt_sci(r.margin);
    row += ',' + (status.empty() ? std::string(verdict_name(r.verdict)) : csv_quote(status));
    row += ',' + std::to_string(r.panels_used);
    return row;
}

}  // namespace fracineq
