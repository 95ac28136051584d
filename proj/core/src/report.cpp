#include "conisym/report.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace conisym {

bool Report::all_pass() const {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

void Report::add(const std::string& name, bool pass, const std::string& witness) {
    checks.push_back(Check{name, pass, witness});
}

namespace {

nlohmann::ordered_json check_json(const Check& c) {
    nlohmann::ordered_json j;
    j["name"] = c.name;
    j["status"] = c.pass ? "pass" : "fail";
    if (!c.witness.empty()) j["witness"] = c.witness;
    return j;
}

nlohmann::ordered_json report_json(const Report& r) {
    nlohmann::ordered_json j;
    j["job"] = r.job;
    j["checks"] = nlohmann::ordered_json::array();
    for (const Check& c : r.checks) j["checks"].push_back(check_json(c));
    return j;
}

} // namespace

std::string report_to_json(const Report& report, int indent) {
    return report_json(report).dump(indent) + "\n";
}

std::string reports_to_json(const std::vector<Report>& reports, int indent) {
    nlohmann::ordered_json j = nlohmann::ordered_json::array();
    for (const Report& r : reports) j.push_back(report_json(r));
    return j.dump(indent) + "\n";
}

std::string report_to_text(const Report& report) {
    std::size_t width = 0;
    for (const Check& c : report.checks) width = std::max(width, c.name.size());
    std::ostringstream out;
    out << "[" << report.job << "]\n";
    for (const Check& c : report.checks) {
        out << "  " << c.name << std::string(width - c.name.size() + 2, ' ')
            << (c.pass ? "pass" : "FAIL");
        if (!c.witness.empty()) out << "  (" << c.witness << ")";
        out << "\n";
    }
    return out.str();
}

std::string reports_to_text(const std::vector<Report>& reports) {
    std::string out;
    for (const Report& r : reports) out += report_to_text(r);
    return out;
}

void sort_reports(std::vector<Report>& reports) {
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.job < b.job; });
}

} // namespace conisym
