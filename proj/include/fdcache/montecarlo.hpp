#pragma once

#include <cstdint>
#include <string>

#include "fdcache/caching.hpp"
#include "fdcache/geometry.hpp"
#include "fdcache/mcestimate.hpp"
#include "fdcache/scenario.hpp"

// Snapshot simulation at the typical cell: the typical SBS sits at the
// origin, its DL node at (r_dl, 0) (interferer isotropy makes the angle
// immaterial), its UL node at distance r_ul at a uniform angle. Interferers
// come from a PPP on the configured disc window; every link draws its own
// fading. Interference sums follow the link-exponent rule: SBS links and
// UL-node-to-SBS links attenuate with alpha1, UL-node-to-DL-node links
// (including the own-cell term active on a cache miss) with alpha2. The
// residual self-interference power is rho_dl times a Gamma(a, b) gain.

namespace fdcache {

struct Snapshot {
    MarkedNetwork network;   // interferers only; typical cell excluded
    double ux_angle = 0.0;   // typical UL node direction
    bool typical_miss = true;

    // per-interferer link gains; h_ul_* are zero for hit-state interferers
    std::vector<double> h_sbs_x, h_ul_x;    // toward the typical SBS
    std::vector<double> h_sbs_dl, h_ul_dl;  // toward the typical DL node
    double h_useful_ul = 0.0, h_useful_dl = 0.0;
    double h_si = 0.0;   // Gamma(a,b) self-interference gain
    double h_ini = 0.0;  // own-cell UL->DL fading

    double sir_ul = 0.0;  // meaningful only when typical_miss
    double sir_dl = 0.0;

    FileProcess files;  // populated only in geographic cache-sampling mode
};

// Aggregate interference at the typical SBS: field terms plus the
// self-interference term when the typical cell is in a miss state.
double interference_at_sbs(const Snapshot& snap, const ScenarioConfig& cfg);

// Aggregate interference at the typical DL node, including the own-cell
// inter-node term when the typical cell is in a miss state.
double interference_at_dl(const Snapshot& snap, const ScenarioConfig& cfg);

// One realization: network, cache states (Bernoulli(1 - p_hit) or
// geographic, per cfg.cache_sampling_mode), fading, and both SIRs (sir_ul
// only when the typical cell misses). Deterministic in the stream.
Snapshot run_snapshot(const ScenarioConfig& cfg, double p_hit, RandomStream& rng);

// Success-probability estimator. Correlated mode evaluates both hop
// indicators on one shared realization; uncorrelated mode redraws the
// interferer field (positions, marks, states, fading) for the UL hop,
// holding the typical geometry and cache state fixed. Requires n >= 100.
McEstimate estimate_p_suc(const ScenarioConfig& cfg, double p_hit, CorrelationMode mode,
                          std::uint64_t seed, long n, int workers = 0);

enum class LaplaceTarget { i_dx, i_x_miss, i_dx_miss };

// Empirical E[exp(-s I)] for one interference target. i_dx uses the field
// interference at the DL node without the own-cell term (every snapshot);
// the miss targets condition on a typical-cell miss, by rejection when
// force_miss is false, or by forcing the typical state (valid because the
// field is independent of it) when true.
McEstimate estimate_laplace(const ScenarioConfig& cfg, double p_hit, double s,
                            LaplaceTarget target, std::uint64_t seed, long n,
                            int workers = 0, bool force_miss = false);

// Optional CSV dumps (see README for schemas).
void dump_snapshot_csv(const Snapshot& snap, const std::string& path);
void dump_samples_csv(const ScenarioConfig& cfg, double p_hit, std::uint64_t seed,
                      long n, const std::string& path);

}  // namespace fdcache
