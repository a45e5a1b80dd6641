#include "awshift/report.hpp"

#include <algorithm>

namespace awshift {

void SuiteReport::add(CheckRecord rec) {
    if (!rec.pass) pass = false;
    checks.push_back(std::move(rec));
}

void SuiteReport::sort_checks() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; });
}

nlohmann::ordered_json SuiteReport::to_json() const {
    nlohmann::ordered_json j;
    j["suite"] = suite;
    j["mode"] = mode;
    j["params"] = params;
    j["seed"] = seed;
    j["precision"] = precision;
    if (truncation > 0) j["truncation"] = truncation;
    if (n_points > 0) j["n_points"] = n_points;
    j["pass"] = pass;
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        nlohmann::ordered_json cj;
        cj["name"] = c.name;
        cj["pass"] = c.pass;
        if (!c.residual.empty()) cj["residual"] = c.residual;
        if (!c.detail.empty()) cj["detail"] = c.detail;
        arr.push_back(cj);
    }
    j["checks"] = arr;
    return j;
}

std::string format_residual(const BigFloat& r) {
    if (r == 0) return "0";
    return r.str(6, std::ios_base::scientific);
}

} // namespace awshift
