#pragma once

#include <string>
#include <vector>

namespace conisym {

// Machine-readable verification outcome shared by the catalog jobs and the
// CLI: {"job": str, "checks": [{"name", "status", "witness"?}]}.
struct Check {
    std::string name;
    bool pass = false;
    std::string witness; // failure detail; empty when passing or none

    static Check passed(std::string name) { return {std::move(name), true, {}}; }
    static Check failed(std::string name, std::string witness = {}) {
        return {std::move(name), false, std::move(witness)};
    }
};

struct Report {
    std::string job;
    std::vector<Check> checks;

    bool all_pass() const;
    void add(Check c) { checks.push_back(std::move(c)); }
    void add(const std::string& name, bool pass, const std::string& witness = {});
};

std::string report_to_json(const Report& report, int indent = 2);
std::string reports_to_json(const std::vector<Report>& reports, int indent = 2);
std::string report_to_text(const Report& report);
std::string reports_to_text(const std::vector<Report>& reports);

// Stable order for merged suites: by job name.
void sort_reports(std::vector<Report>& reports);

} // namespace conisym
