#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "awshift/cliapp.hpp"

using namespace awshift;

int main(int argc, char** argv) {
    CLI::App app{"Exact Askey-Wilson / Cherednik shift-operator engine"};
    app.require_subcommand(1);
    app.fallthrough(); // accept the global flags after the subcommand too

    std::string config_path, mode_str, out_path;
    unsigned long long seed = 0;
    unsigned precision = 0;
    bool have_seed = false, have_precision = false;

    app.add_option("--config", config_path, "key=value configuration file");
    app.add_option("--seed", seed, "random seed (reproducible sampling)")
        ->each([&](const std::string&) { have_seed = true; });
    app.add_option("--precision", precision, "working precision in decimal digits")
        ->each([&](const std::string&) { have_precision = true; });
    app.add_option("--mode", mode_str, "symbolic | rational | numeric");
    app.add_option("--out", out_path, "write the JSON report/polynomial here");

    std::string family = "E", op_name = "L", suite = "all";
    long index = 0, nmax = 4;

    CLI::App* gen = app.add_subcommand("gen", "generate E_n or P_m");
    gen->add_option("--family", family, "E or P")->required();
    gen->add_option("--index", index, "family index")->required();

    CLI::App* apply = app.add_subcommand("apply", "apply a named operator to E_n or P_m");
    apply->add_option("--op", op_name, "operator name (T0, T1, Y, L, G+, E12, nsG+, ...)")
        ->required();
    apply->add_option("--family", family, "E or P")->required();
    apply->add_option("--index", index, "family index")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite,
                       "daha | symshift | matshift | norms | adjoints | limits | all");

    CLI::App* norms = app.add_subcommand("norms", "norm table with residuals");
    norms->add_option("--nmax", nmax, "largest index");

    app.add_subcommand("limits", "print the q->1 limit operators and verify them");

    CLI11_PARSE(app, argc, argv);

    try {
        RunConfig cfg =
            config_path.empty() ? RunConfig{} : RunConfig::from_file(config_path);
        // flags override the file
        if (have_seed) cfg.seed = seed;
        if (have_precision) cfg.precision = precision;
        if (!mode_str.empty()) cfg.set("mode", mode_str);
        if (!out_path.empty()) cfg.out = out_path;

        if (gen->parsed()) {
            if (family != "E" && family != "P") {
                std::cout << "config error: family must be E or P\n";
                return 2;
            }
            return cmd_gen(cfg, family[0], index, std::cout);
        }
        if (apply->parsed()) {
            if (family != "E" && family != "P") {
                std::cout << "config error: family must be E or P\n";
                return 2;
            }
            return cmd_apply(cfg, op_name, family[0], index, std::cout);
        }
        if (verify->parsed()) return cmd_verify(cfg, suite, std::cout);
        if (norms->parsed()) return cmd_norms(cfg, nmax, std::cout);
        return cmd_limits(cfg, std::cout);
    } catch (const ConfigError& e) {
        std::cout << "config error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cout << "error: " << e.what() << "\n";
        return 1;
    }
}
