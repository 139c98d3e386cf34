#include "fdcache/caching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fdcache/parallel.hpp"

namespace fdcache {

CatalogModel zipf_catalog(long catalog_size, double zipf_gamma, double eta_files) {
    if (catalog_size < 1) throw std::invalid_argument("zipf_catalog: catalog_size must be >= 1");
    if (!(zipf_gamma >= 0.0)) throw std::invalid_argument("zipf_catalog: gamma must be >= 0");
    CatalogModel cat;
    cat.catalog_size = catalog_size;
    cat.zipf_gamma = zipf_gamma;
    cat.eta_files = eta_files;
    cat.request_probs.resize(static_cast<std::size_t>(catalog_size));
    double norm = 0.0;
    for (long i = 1; i <= catalog_size; ++i)
        norm += std::pow(static_cast<double>(i), -zipf_gamma);
    for (long i = 1; i <= catalog_size; ++i)
        cat.request_probs[static_cast<std::size_t>(i - 1)] =
            std::pow(static_cast<double>(i), -zipf_gamma) / norm;
    return cat;
}

double cache_hit_probability(const CatalogModel& catalog, double radius_request,
                             double radius_cache, long storage_size) {
    if (storage_size > catalog.catalog_size)
        throw std::invalid_argument("cache_hit_probability: storage exceeds catalog");
    const double area_r = M_PI * radius_request * radius_request;
    const double area_c = M_PI * radius_cache * radius_cache;
    double sum = 0.0;
    for (long i = 0; i < storage_size; ++i) {
        const double mu = catalog.request_probs[static_cast<std::size_t>(i)] * catalog.eta_files;
        sum += (1.0 - std::exp(-mu * area_r)) * (1.0 - std::exp(-mu * area_c));
    }
    return sum / static_cast<double>(catalog.catalog_size);
}

MarkedNetwork assign_cache_states_bernoulli(MarkedNetwork net, double p_hit,
                                            RandomStream& rng) {
    if (!(p_hit >= 0.0 && p_hit <= 1.0))
        throw std::invalid_argument("assign_cache_states_bernoulli: p_hit must be in [0,1]");
    for (auto& m : net.cache_miss) m = rng.bernoulli(1.0 - p_hit) ? 1 : 0;
    return net;
}

HitReport geographic_hit_indicator(const FileProcess& files, const CacheRegions& regions,
                                   long storage_size, long catalog_size) {
    std::vector<unsigned char> in_request(static_cast<std::size_t>(catalog_size) + 1, 0);
    std::vector<unsigned char> in_cache(static_cast<std::size_t>(catalog_size) + 1, 0);
    for (std::size_t k = 0; k < files.points.size(); ++k) {
        const int rank = files.file_index[k];
        if (distance(files.points[k], regions.request_center) <= regions.request_radius)
            in_request[static_cast<std::size_t>(rank)] = 1;
        if (rank <= storage_size &&
            distance(files.points[k], regions.cache_center) <= regions.cache_radius)
            in_cache[static_cast<std::size_t>(rank)] = 1;
    }
    HitReport rep;
    long hits = 0;
    for (long i = 1; i <= catalog_size; ++i) {
        if (in_request[static_cast<std::size_t>(i)]) rep.requested.push_back(static_cast<int>(i));
        if (in_cache[static_cast<std::size_t>(i)]) rep.cached.push_back(static_cast<int>(i));
        if (in_request[static_cast<std::size_t>(i)] && in_cache[static_cast<std::size_t>(i)]) ++hits;
    }
    rep.hit_value = static_cast<double>(hits) / static_cast<double>(catalog_size);
    return rep;
}

McEstimate estimate_p_hit_geographic(const ScenarioConfig& cfg, GeoMode mode,
                                     std::uint64_t seed, long n, int workers) {
    const CatalogModel cat = zipf_catalog(cfg.catalog_size, cfg.zipf_gamma, cfg.eta_files);
    const double area_r = M_PI * cfg.radius_request * cfg.radius_request;
    const double area_c = M_PI * cfg.radius_cache * cfg.radius_cache;
    const long F = cfg.catalog_size;
    const long S = cfg.storage_size;

    std::vector<double> values(static_cast<std::size_t>(n), 0.0);

    if (mode == GeoMode::independent_regions) {
        // Restricting the marked file PPP to a ball gives independent
        // Poisson(p_i * eta * area) counts per rank, so the two region
        // indicators can be drawn directly from those counts.
        parallel_for(n, workers, [&](long r) {
            RandomStream rng = split_stream(seed, static_cast<std::uint64_t>(r));
            long hits = 0;
            for (long i = 0; i < F; ++i) {
                const double mu = cat.request_probs[static_cast<std::size_t>(i)] * cfg.eta_files;
                const bool requested = rng.poisson(mu * area_r) > 0;
                const bool cached = i < S && rng.poisson(mu * area_c) > 0;
                if (requested && cached) ++hits;
            }
            values[static_cast<std::size_t>(r)] =
                static_cast<double>(hits) / static_cast<double>(F);
        });
    } else {
        // One shared process on a disc around the SBS covering both the
        // cache ball and the request ball (request center r_dl away).
        const double cover = std::max(cfg.radius_cache, cfg.r_dl + cfg.radius_request);
        CacheRegions regions;
        regions.cache_center = Point2D{0.0, 0.0};
        regions.cache_radius = cfg.radius_cache;
        regions.request_center = Point2D{cfg.r_dl, 0.0};
        regions.request_radius = cfg.radius_request;
        parallel_for(n, workers, [&](long r) {
            RandomStream rng = split_stream(seed, static_cast<std::uint64_t>(r));
            const FileProcess fp = sample_file_process(cat, cover, rng);
            values[static_cast<std::size_t>(r)] =
                geographic_hit_indicator(fp, regions, S, F).hit_value;
        });
    }
    return make_estimate(values, seed);
}

}  // namespace fdcache
