#pragma once

// Machine-readable (JSON) and human-readable (Markdown) certificate reports.
//
// JSON layout, schema 1:
//   {"schema": 1, "command": str, "subject": {...},
//    "findings": [{"name": str, "value": any, "pass": bool}, ...],
//    "verdict": "pass" | "fail"}
// Findings are sorted by name (digit runs compared numerically). Rationals
// appear as {"num": n, "den": d}; no floating-point values are ever emitted.

#include "unbend/rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace unbend {

struct Finding {
    std::string name;
    nlohmann::json value;
    bool pass = true;

    bool operator==(const Finding&) const = default;
};

struct Report {
    std::string command;
    nlohmann::json subject = nlohmann::json::object();
    std::vector<Finding> findings;

    void add(std::string name, nlohmann::json value, bool pass = true) {
        findings.push_back({std::move(name), std::move(value), pass});
    }
    bool passed() const;
    /// Findings in canonical order.
    void canonicalize();

    bool operator==(const Report&) const = default;
};

enum class Format { Json, Markdown };

nlohmann::json rational_to_json(const Rational& r);
/// Accepts {num, den} objects and plain integers; throws std::invalid_argument.
Rational rational_from_json(const nlohmann::json& j);

/// "a2" < "a10"; used to order findings.
bool natural_less(const std::string& a, const std::string& b);

nlohmann::json to_json(const Report& r);
/// Throws std::invalid_argument if the document does not follow schema 1 or
/// its verdict disagrees with its findings.
Report report_from_json(const nlohmann::json& j);

std::string emit(const Report& r, Format format);

/// Short text form of a finding value: rationals as "n/d", arrays in brackets.
std::string render_value(const nlohmann::json& v);

}  // namespace unbend
