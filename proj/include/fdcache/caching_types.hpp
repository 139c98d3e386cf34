#pragma once

#include <vector>

namespace fdcache {

// Zipf-ranked catalog: request_probs sum to one and are nonincreasing in
// rank; eta_files is the spatial density of the file point process.
struct CatalogModel {
    long catalog_size = 0;
    std::vector<double> request_probs;  // p_1..p_F, rank order
    double zipf_gamma = 0.0;
    double eta_files = 0.0;
};

// p_i proportional to i^-gamma, normalized. F >= 1 required.
CatalogModel zipf_catalog(long catalog_size, double zipf_gamma, double eta_files);

// Closed-form cache-hit probability of the geographic caching model:
// (1/F) * sum_{i<=S} (1 - exp(-p_i eta pi R_R^2)) (1 - exp(-p_i eta pi R_C^2)).
double cache_hit_probability(const CatalogModel& catalog, double radius_request,
                             double radius_cache, long storage_size);

}  // namespace fdcache
