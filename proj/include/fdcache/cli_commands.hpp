#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

// Batch commands behind the fdcache binary. Exit codes: 0 ok,
// 1 usage/validation, 2 I/O, 3 numeric failure.

namespace fdcache::cli {

int cmd_validate(const std::string& scenario_path, std::ostream& out, std::ostream& err);

int cmd_analytic(const std::string& scenario_path, const std::string& out_csv,
                 std::ostream& err);

struct SimulateOptions {
    std::string scenario_path;
    std::string out_csv;
    std::optional<std::string> mode;  // "correlated" | "uncorrelated"
    std::optional<std::uint64_t> seed;
    std::optional<long> snapshots;
    int workers = 0;
    std::string dump_snapshot;  // optional point dump of the first snapshot
    std::string dump_samples;   // optional raw per-snapshot SIR dump
};
int cmd_simulate(const SimulateOptions& opt, std::ostream& err);

struct SweepOptions {
    std::string scenario_path;
    std::string sweep;    // "key=v1,v2,..." or "key=logspace:a:b:n"
    std::string engines = "analytic,montecarlo";
    std::string out_csv;
    std::optional<std::uint64_t> seed;
    std::optional<long> snapshots;
    int workers = 0;
};
int cmd_sweep(const SweepOptions& opt, std::ostream& err);

}  // namespace fdcache::cli
