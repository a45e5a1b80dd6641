#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "awshift/bigcomplex.hpp"

namespace awshift {

// One verification check in the machine-readable report.  Residuals are
// rendered with fixed formatting so identical runs produce byte-identical
// JSON.
struct CheckRecord {
    std::string name;
    bool pass = true;
    std::string residual; // empty for exact (zero-residual) checks
    std::string detail;
};

struct SuiteReport {
    std::string suite;
    std::string mode;
    std::string params;
    unsigned long long seed = 0;
    unsigned precision = 0;
    int truncation = 0;
    long n_points = 0;
    bool pass = true;
    std::vector<CheckRecord> checks;

    void add(CheckRecord rec);
    void sort_checks(); // deterministic assembly: ordered by check name
    nlohmann::ordered_json to_json() const;
};

std::string format_residual(const BigFloat& r);

} // namespace awshift
