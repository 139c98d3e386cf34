#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "fdcache/cli_commands.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Cache-aided full-duplex small-cell network toolkit"};
    app.require_subcommand(1);

    std::string scenario, out, mode, sweep_arg, engines = "analytic,montecarlo";
    std::string dump_snapshot, dump_samples;
    std::optional<std::uint64_t> seed;
    std::optional<long> snapshots;
    int workers = 0;

    auto* validate = app.add_subcommand("validate", "Check a scenario file");
    validate->add_option("--scenario", scenario, "Scenario file")->required();

    auto* analytic = app.add_subcommand("analytic", "Evaluate the analytic pipeline");
    analytic->add_option("--scenario", scenario, "Scenario file")->required();
    analytic->add_option("--out", out, "Output CSV")->required();

    auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimation");
    simulate->add_option("--scenario", scenario, "Scenario file")->required();
    simulate->add_option("--out", out, "Output CSV")->required();
    simulate->add_option("--mode", mode, "correlated|uncorrelated");
    simulate->add_option("--seed", seed, "Override the scenario seed");
    simulate->add_option("--snapshots", snapshots, "Override snapshot count");
    simulate->add_option("--workers", workers, "Worker threads (0 = hardware)");
    simulate->add_option("--dump-snapshot", dump_snapshot, "Write one snapshot's points as CSV");
    simulate->add_option("--dump-samples", dump_samples, "Write raw per-snapshot SIR samples");

    auto* sweep = app.add_subcommand("sweep", "Sweep one parameter");
    sweep->add_option("--scenario", scenario, "Scenario file")->required();
    sweep->add_option("--sweep", sweep_arg, "KEY=v1,v2,... or KEY=logspace:a:b:n")->required();
    sweep->add_option("--engines", engines, "Comma list from {analytic, montecarlo}");
    sweep->add_option("--out", out, "Output CSV")->required();
    sweep->add_option("--seed", seed, "Override the scenario seed");
    sweep->add_option("--snapshots", snapshots, "Override snapshot count");
    sweep->add_option("--workers", workers, "Worker threads (0 = hardware)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;  // usage problems -> 1
    }

    if (validate->parsed()) return fdcache::cli::cmd_validate(scenario, std::cout, std::cerr);
    if (analytic->parsed()) return fdcache::cli::cmd_analytic(scenario, out, std::cerr);
    if (simulate->parsed()) {
        fdcache::cli::SimulateOptions opt;
        opt.scenario_path = scenario;
        opt.out_csv = out;
        if (!mode.empty()) opt.mode = mode;
        opt.seed = seed;
        opt.snapshots = snapshots;
        opt.workers = workers;
        opt.dump_snapshot = dump_snapshot;
        opt.dump_samples = dump_samples;
        return fdcache::cli::cmd_simulate(opt, std::cerr);
    }
    fdcache::cli::SweepOptions opt;
    opt.scenario_path = scenario;
    opt.sweep = sweep_arg;
    opt.engines = engines;
    opt.out_csv = out;
    opt.seed = seed;
    opt.snapshots = snapshots;
    opt.workers = workers;
    return fdcache::cli::cmd_sweep(opt, std::cerr);
}
