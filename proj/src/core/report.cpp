#include "report.hpp"

#include <fstream>

namespace ipm {

ordered_json to_json(const Report& report) {
    ordered_json j;
    j["experiment"] = report.experiment;
    j["params"] = report.params;
    ordered_json fits = ordered_json::array();
    for (const auto& f : report.fits) {
        ordered_json jf;
        jf["name"] = f.name;
        jf["exponent"] = f.exponent;
        jf["exponent_fixed"] = f.exponent_fixed;
        jf["prefactor"] = f.prefactor;
        jf["residual"] = f.residual;
        jf["x"] = f.x;
        jf["y"] = f.y;
        fits.push_back(jf);
    }
    j["fits"] = fits;
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.checks) {
        ordered_json jc;
        jc["name"] = c.name;
        jc["pass"] = c.pass;
        jc["margin"] = c.margin;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    return j;
}

void emit_report(const Report& report, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out) fail(ErrorKind::Io, path + ": cannot open for writing");
    out << to_json(report).dump(2) << '\n';
    if (!out) fail(ErrorKind::Io, path + ": write failed");
}

}  // namespace ipm
