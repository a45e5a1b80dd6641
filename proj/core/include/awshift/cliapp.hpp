#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "awshift/report.hpp"
#include "awshift/speclimit.hpp"

namespace awshift {

// Run configuration, parsed from a flat key=value config file (comments with
// '#') with command-line flags overriding.  The seed fully determines all
// random sampling.
struct RunConfig {
    ParamMode mode = ParamMode::RationalSpecialized;
    // generator values for the rational mode, as rationals "p/q"
    std::array<Rat, 5> taus{rat(2), rat(3), rat(5), rat(7), rat(1, 2)};
    // numeric mode: magnitude (decimal string) and angle as a fraction of pi
    bool custom_numeric = false;
    std::array<std::string, 5> numeric_mag{"0.50", "1.10", "0.55", "1.05", "0.72"};
    std::array<Rat, 5> numeric_arg{rat(1, 5), rat(-1, 7), rat(1, 11), rat(2, 9), rat(1, 9)};
    unsigned precision = 128;
    int truncation = 0; // 0 = adaptive
    int degree = 6;
    long nmax = 4;
    unsigned long long seed = 42;
    std::string out; // JSON output path

    static RunConfig from_file(const std::string& path);
    void set(const std::string& key, const std::string& value);

    // builds the parameter set for the configured mode (and applies the
    // configured precision)
    ParamSet params() const;
};

// subcommand implementations; they print human-readable output to `os` and
// return the process exit code (0 ok, 1 check failure, 2 configuration)
int cmd_gen(const RunConfig& cfg, char family, long index, std::ostream& os);
int cmd_apply(const RunConfig& cfg, const std::string& op_name, char family, long index,
              std::ostream& os);
int cmd_verify(const RunConfig& cfg, const std::string& suite, std::ostream& os,
               std::string* json_out = nullptr);
int cmd_norms(const RunConfig& cfg, long nmax, std::ostream& os,
              std::string* json_out = nullptr);
int cmd_limits(const RunConfig& cfg, std::ostream& os, std::string* json_out = nullptr);

// suite runners (exact suites sample RationalSpecialized parameters from the
// seed; numeric suites use the configured numeric parameters)
SuiteReport run_suite_daha(const RunConfig& cfg);
SuiteReport run_suite_symshift(const RunConfig& cfg);
SuiteReport run_suite_matshift(const RunConfig& cfg);
SuiteReport run_suite_norms(const RunConfig& cfg);
SuiteReport run_suite_adjoints(const RunConfig& cfg);
SuiteReport run_suite_limits(const RunConfig& cfg);

// deterministic text + JSON rendering of a polynomial
std::string poly_to_text(const LaurentPoly& f);
nlohmann::ordered_json poly_to_json(const LaurentPoly& f);

} // namespace awshift
