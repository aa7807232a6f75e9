#include <iostream>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Build and check coefficient sequences whose generalized partial sums approximate scheduled targets"};
    app.require_subcommand(1);

    std::string config;
    auto* run = app.add_subcommand("run", "run the task schedule of a config file");
    run->add_option("config", config, "run configuration (JSON)")->required()->check(CLI::ExistingFile);

    std::string verify_dir;
    double multiplier = 1.0;
    auto* verify = app.add_subcommand("verify", "recompute every ledger entry");
    verify->add_option("dir", verify_dir, "artifact directory")->required();
    verify->add_option("--density-mult", multiplier, "grid density multiplier")
        ->check(CLI::Range(1.0, 1e6));

    std::string plot_dir;
    double window = 0.5;
    auto* plot = app.add_subcommand("plot-data", "emit plot-ready CSVs next to the artifacts");
    plot->add_option("dir", plot_dir, "artifact directory")->required();
    plot->add_option("--window", window, "trailing window fraction for the radius estimate")
        ->check(CLI::Range(1e-9, 1.0));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : utsforge::cli::kExitError;
    }

    if (*run) return utsforge::cli::cmd_run(config, std::cout, std::cerr);
    if (*verify) return utsforge::cli::cmd_verify(verify_dir, multiplier, std::cout, std::cerr);
    return utsforge::cli::cmd_plotdata(plot_dir, window, std::cout, std::cerr);
}
