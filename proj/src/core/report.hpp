#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "common.hpp"

namespace ipm {

using ordered_json = nlohmann::ordered_json;

struct FitReport {
    std::string name;
    std::vector<double> x;
    std::vector<double> y;
    double exponent = 0.0;
    double prefactor = 0.0;
    double residual = 0.0;
    bool exponent_fixed = false;
};

struct CheckReport {
    std::string name;
    bool pass = false;
    double margin = 0.0;
};

struct Report {
    std::string experiment;
    ordered_json params = ordered_json::object();
    std::vector<FitReport> fits;
    std::vector<CheckReport> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
    void add_check(const std::string& name, bool pass, double margin) {
        checks.push_back({name, pass, margin});
    }
};

ordered_json to_json(const Report& report);

// Stable key order, numeric margins, trailing newline; identical reports
// serialize byte-identically.
void emit_report(const Report& report, const std::string& path);

}  // namespace ipm
