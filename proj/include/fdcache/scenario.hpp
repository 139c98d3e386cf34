#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

// Scenario configuration: one flat key=value file drives both the analytic
// and the Monte Carlo engine. All values are immutable after load; sharing a
// ScenarioConfig across worker threads needs no synchronization.

namespace fdcache {

enum class CorrelationMode { correlated, uncorrelated };
enum class CacheSamplingMode { bernoulli, geographic };

struct ScenarioConfig {
    // Network geometry and densities
    double lambda_sbs = 0.0;      // SBS density [1/m^2]
    double eta_files = 0.0;       // file density [1/m^2]
    double radius_request = 0.0;  // request-region radius R_R [m]
    double radius_cache = 0.0;    // cache-region radius R_C [m]
    double r_ul = 0.0;            // UL node <-> SBS distance [m]
    double r_dl = 0.0;            // SBS <-> DL node distance [m]

    // Catalog
    long catalog_size = 0;        // F
    long storage_size = 0;        // S, cached ranks 1..S
    double zipf_gamma = 0.0;

    // Radio
    double rho_ul_dbm = 0.0;
    double rho_dl_dbm = 0.0;
    double alpha1 = 0.0;          // all links except UL node -> DL node
    double alpha2 = 0.0;          // UL node -> DL node
    double theta_db = 0.0;        // target SIR threshold
    double rician_k = 0.0;        // self-interference Rician K-factor
    double si_attenuation_db = 0.0;

    // Simulation controls
    double sim_window_radius = 0.0;  // 0 = auto (see auto_window_radius)
    long n_snapshots = 10000;
    std::uint64_t seed = 1;
    CorrelationMode correlation_mode = CorrelationMode::correlated;
    CacheSamplingMode cache_sampling_mode = CacheSamplingMode::bernoulli;
};

// Every violated invariant, one message per violation naming the field.
// Empty result = valid. Pure: identical configs give identical lists.
std::vector<std::string> validate(const ScenarioConfig& cfg);

// Non-fatal advisories (currently: r_ul < 2*r_dl undermines the
// short-access-link assumption behind the fixed-distance marks).
std::vector<std::string> soft_warnings(const ScenarioConfig& cfg);

// Default observation window: 6 / sqrt(lambda*pi), floored at 300 m.
double auto_window_radius(double lambda_sbs);

// Resolved window for a config (explicit value, or the auto rule if 0).
double effective_window_radius(const ScenarioConfig& cfg);

// UTF-8 "key = value" lines, '#' comments. Unknown keys are errors, as are
// missing required keys; simulation controls have defaults. Throws
// std::runtime_error with a message naming the offending line/key.
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::string& path);  // I/O failure -> ScenarioIoError
std::string format_scenario(const ScenarioConfig& cfg);

struct ScenarioIoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Linear-domain parameters derived once from a config.
struct LinkParams {
    double rho_ul_w = 0.0;
    double rho_dl_w = 0.0;
    double theta = 0.0;       // linear SIR threshold
    double omega = 0.0;       // linear SI attenuation, >= 1
};
LinkParams derive_link_params(const ScenarioConfig& cfg);

const char* to_string(CorrelationMode m);
const char* to_string(CacheSamplingMode m);

}  // namespace fdcache
