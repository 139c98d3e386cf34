#pragma once

#include <cstdint>

#include "fdcache/caching_types.hpp"
#include "fdcache/geometry.hpp"
#include "fdcache/mcestimate.hpp"
#include "fdcache/scenario.hpp"

// Geographic caching model: request/cache regions, per-realization hit
// indicators, and Monte Carlo estimation of the cache-hit probability.

namespace fdcache {

struct CacheRegions {
    Point2D request_center;  // DL node
    double request_radius = 0.0;
    Point2D cache_center;    // SBS
    double cache_radius = 0.0;
};

// i.i.d. Bernoulli(1 - p_hit) miss states across SBSs.
MarkedNetwork assign_cache_states_bernoulli(MarkedNetwork net, double p_hit,
                                            RandomStream& rng);

// Per-realization hit report. requested = ranks with at least one point in
// the request ball; cached = ranks <= S with at least one point in the cache
// ball; hit_value = |requested intersect cached| / F, the per-realization
// analogue of the closed-form average.
struct HitReport {
    std::vector<int> requested;
    std::vector<int> cached;
    double hit_value = 0.0;
};
HitReport geographic_hit_indicator(const FileProcess& files, const CacheRegions& regions,
                                   long storage_size, long catalog_size);

enum class GeoMode {
    independent_regions,  // the two region indicators use independent file draws
    physical_overlap      // one shared file process covers both (overlapping) balls
};

// Mean of the geographic hit indicator over n realizations.
// independent_regions samples the restricted file process of each ball
// independently (per-rank Poisson presence counts, which is the exact law of
// a thinned PPP restricted to the ball); physical_overlap places one point
// process on a disc covering both balls and tests membership.
McEstimate estimate_p_hit_geographic(const ScenarioConfig& cfg, GeoMode mode,
                                     std::uint64_t seed, long n, int workers = 0);

}  // namespace fdcache
