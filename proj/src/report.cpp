#include "unbend/report.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

namespace unbend {

using nlohmann::json;

bool Report::passed() const {
    return std::all_of(findings.begin(), findings.end(), [](const Finding& f) { return f.pass; });
}

void Report::canonicalize() {
    std::stable_sort(findings.begin(), findings.end(),
                     [](const Finding& a, const Finding& b) { return natural_less(a.name, b.name); });
}

json rational_to_json(const Rational& r) { return json{{"num", numerator_i64(r)}, {"den", denominator_i64(r)}}; }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
    if (j.is_object() && j.size() == 2 && j.contains("num") && j.contains("den") &&
        j["num"].is_number_integer() && j["den"].is_number_integer()) {
        const auto den = j["den"].get<std::int64_t>();
        if (den <= 0) throw std::invalid_argument("rational with non-positive denominator");
        return Rational(j["num"].get<std::int64_t>(), den);
    }
    throw std::invalid_argument("not a rational: " + j.dump());
}

bool natural_less(const std::string& a, const std::string& b) {
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const bool da = std::isdigit(static_cast<unsigned char>(a[i])) != 0;
        const bool db = std::isdigit(static_cast<unsigned char>(b[j])) != 0;
        if (da && db) {
            std::size_t ie = i;
            std::size_t je = j;
            while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
            while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
            std::string na = a.substr(i, ie - i);
            std::string nb = b.substr(j, je - j);
            na.erase(0, std::min(na.find_first_not_of('0'), na.size()));
            nb.erase(0, std::min(nb.find_first_not_of('0'), nb.size()));
            if (na.size() != nb.size()) return na.size() < nb.size();
            if (na != nb) return na < nb;
            i = ie;
            j = je;
        } else {
            if (a[i] != b[j]) return a[i] < b[j];
            ++i;
            ++j;
        }
    }
    if ((a.size() - i) != (b.size() - j)) return (a.size() - i) < (b.size() - j);
    return a < b;
}

namespace {

void reject_floats(const json& v) {
    if (v.is_number_float()) throw std::invalid_argument("floating-point value in report");
    if (v.is_structured())
        for (const auto& x : v) reject_floats(x);
}

bool is_rational_object(const json& v) {
    return v.is_object() && v.size() == 2 && v.contains("num") && v.contains("den");
}

}  // namespace

json to_json(const Report& r) {
    Report sorted = r;
    sorted.canonicalize();
    json findings = json::array();
    for (const Finding& f : sorted.findings) {
        reject_floats(f.value);
        findings.push_back(json{{"name", f.name}, {"value", f.value}, {"pass", f.pass}});
    }
    reject_floats(r.subject);
    return json{{"schema", 1},
                {"command", r.command},
                {"subject", r.subject},
                {"findings", std::move(findings)},
                {"verdict", sorted.passed() ? "pass" : "fail"}};
}

Report report_from_json(const json& j) {
    if (!j.is_object()) throw std::invalid_argument("report must be a JSON object");
    for (const char* key : {"schema", "command", "subject", "findings", "verdict"})
        if (!j.contains(key)) throw std::invalid_argument(std::string("report is missing '") + key + "'");
    if (j["schema"] != 1) throw std::invalid_argument("unsupported report schema " + j["schema"].dump());
    Report r;
    r.command = j["command"].get<std::string>();
    r.subject = j["subject"];
    for (const auto& f : j["findings"]) {
        if (!f.is_object() || !f.contains("name") || !f.contains("value") || !f.contains("pass"))
            throw std::invalid_argument("malformed finding " + f.dump());
        r.add(f["name"].get<std::string>(), f["value"], f["pass"].get<bool>());
    }
    reject_floats(r.subject);
    for (const auto& f : r.findings) reject_floats(f.value);
    const std::string verdict = j["verdict"].get<std::string>();
    if (verdict != "pass" && verdict != "fail") throw std::invalid_argument("verdict must be pass or fail");
    if ((verdict == "pass") != r.passed()) throw std::invalid_argument("verdict disagrees with findings");
    return r;
}

std::string render_value(const json& v) {
    if (is_rational_object(v)) {
        const Rational q = rational_from_json(v);
        return to_string(q);
    }
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "[";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) s += ", ";
            s += render_value(v[i]);
        }
        return s + "]";
    }
    if (v.is_object()) {
        std::string s = "{";
        bool first = true;
        for (const auto& [key, val] : v.items()) {
            if (!first) s += ", ";
            first = false;
            s += key + ": " + render_value(val);
        }
        return s + "}";
    }
    return v.dump();
}

namespace {

std::string escape_cell(std::string s) {
    std::string out;
    for (char c : s) {
        if (c == '|') out += "\\|";
        else if (c == '\n') out += ' ';
        else out += c;
    }
    return out;
}

std::string emit_markdown(const Report& r) {
    Report sorted = r;
    sorted.canonicalize();
    std::ostringstream os;
    os << "# unbend " << r.command << "\n\n";
    if (!r.subject.empty()) {
        os << "Subject: ";
        bool first = true;
        for (const auto& [key, val] : r.subject.items()) {
            if (!first) os << ", ";
            first = false;
            os << key << " = `" << render_value(val) << "`";
        }
        os << "\n\n";
    }
    if (sorted.findings.empty()) {
        os << "_No findings._\n\n";
    } else {
        os << "| finding | value | result |\n|---|---|---|\n";
        for (const Finding& f : sorted.findings)
            os << "| " << escape_cell(f.name) << " | " << escape_cell(render_value(f.value)) << " | "
               << (f.pass ? "pass" : "**FAIL**") << " |\n";
        os << "\n";
    }
    os << "Verdict: **" << (sorted.passed() ? "PASS" : "FAIL") << "**\n";
    return os.str();
}

}  // namespace

std::string emit(const Report& r, Format format) {
    if (format == Format::Json) return to_json(r).dump(2) + "\n";
    return emit_markdown(r);
}

}  // namespace unbend
