#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "fdcache/caching.hpp"

using namespace fdcache;

namespace {

ScenarioConfig reference_config() {
    ScenarioConfig cfg;
    cfg.lambda_sbs = 5e-4;
    cfg.eta_files = 1.0;
    cfg.catalog_size = 100;
    cfg.storage_size = 35;
    cfg.zipf_gamma = 0.7;
    cfg.radius_request = 8.0;
    cfg.radius_cache = 40.0;
    cfg.r_ul = 20.0;
    cfg.r_dl = 5.0;
    cfg.rho_ul_dbm = 30.0;
    cfg.rho_dl_dbm = 24.0;
    cfg.alpha1 = 3.0;
    cfg.alpha2 = 4.0;
    cfg.theta_db = 0.0;
    cfg.rician_k = 1.0;
    cfg.si_attenuation_db = 60.0;
    return cfg;
}

// Hit probability for an arbitrary cached subset (rank set), used to check
// that caching the most popular ranks is optimal.
double hit_prob_subset(const CatalogModel& cat, double rr, double rc,
                       const std::vector<int>& subset) {
    const double ar = M_PI * rr * rr, ac = M_PI * rc * rc;
    double sum = 0.0;
    for (int i : subset) {
        const double mu = cat.request_probs[static_cast<std::size_t>(i - 1)] * cat.eta_files;
        sum += (1.0 - std::exp(-mu * ar)) * (1.0 - std::exp(-mu * ac));
    }
    return sum / static_cast<double>(cat.catalog_size);
}

}  // namespace

TEST_CASE("zipf_catalog: uniform limit, exact small case, Zipf shape") {
    const CatalogModel flat = zipf_catalog(10, 0.0, 1.0);
    for (double p : flat.request_probs) CHECK(p == doctest::Approx(0.1).epsilon(1e-14));

    const CatalogModel small = zipf_catalog(3, 1.0, 1.0);
    CHECK(small.request_probs[0] == doctest::Approx(6.0 / 11.0).epsilon(1e-14));
    CHECK(small.request_probs[1] == doctest::Approx(3.0 / 11.0).epsilon(1e-14));
    CHECK(small.request_probs[2] == doctest::Approx(2.0 / 11.0).epsilon(1e-14));

    const CatalogModel z = zipf_catalog(100, 0.7, 1.0);
    double total = 0.0;
    for (std::size_t i = 0; i < z.request_probs.size(); ++i) {
        total += z.request_probs[i];
        if (i > 0) CHECK(z.request_probs[i] < z.request_probs[i - 1]);
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

    CHECK_THROWS_AS(zipf_catalog(0, 0.7, 1.0), std::invalid_argument);
}

TEST_CASE("cache_hit_probability: empty storage, saturation limit, S/F cap") {
    const CatalogModel cat = zipf_catalog(100, 0.7, 1.0);
    CHECK(cache_hit_probability(cat, 8.0, 40.0, 0) == 0.0);
    // both region means huge for every rank -> S/F
    const CatalogModel dense = zipf_catalog(10, 0.3, 1000.0);
    CHECK(cache_hit_probability(dense, 1e4, 1e4, 4) == doctest::Approx(0.4).epsilon(1e-12));

    RandomStream rng(41);
    for (int t = 0; t < 100; ++t) {
        const long f = 2 + static_cast<long>(rng.uniform01() * 30);
        const long s = static_cast<long>(rng.uniform01() * static_cast<double>(f));
        const CatalogModel c = zipf_catalog(f, rng.uniform(0.0, 1.5), rng.uniform(0.01, 2.0));
        const double v = cache_hit_probability(c, rng.uniform(1.0, 30.0),
                                               rng.uniform(5.0, 90.0), s);
        CHECK(v >= 0.0);
        CHECK(v <= static_cast<double>(s) / static_cast<double>(f) + 1e-12);
    }
}

TEST_CASE("cache_hit_probability: frozen reference point") {
    // F=100, S=35, gamma=0.7, eta=1, R_R=8, R_C=40
    const CatalogModel cat = zipf_catalog(100, 0.7, 1.0);
    CHECK(cache_hit_probability(cat, 8.0, 40.0, 35) ==
          doctest::Approx(0.3199672242752484).epsilon(1e-12));
    CHECK(cache_hit_probability(cat, 8.0, 40.0, 60) ==
          doctest::Approx(0.5005309791912199).epsilon(1e-12));
}

TEST_CASE("cache_hit_probability is nondecreasing in eta, radii, and storage") {
    RandomStream rng(42);
    for (int t = 0; t < 60; ++t) {
        const long f = 3 + static_cast<long>(rng.uniform01() * 40);
        const double g = rng.uniform(0.0, 1.2);
        const double eta = rng.uniform(0.02, 2.0);
        const double rr = rng.uniform(2.0, 20.0);
        const double rc = rng.uniform(10.0, 80.0);
        const long s = 1 + static_cast<long>(rng.uniform01() * static_cast<double>(f - 1));

        const double base = cache_hit_probability(zipf_catalog(f, g, eta), rr, rc, s);
        CHECK(cache_hit_probability(zipf_catalog(f, g, eta * 1.5), rr, rc, s) >= base - 1e-15);
        CHECK(cache_hit_probability(zipf_catalog(f, g, eta), rr * 1.5, rc, s) >= base - 1e-15);
        CHECK(cache_hit_probability(zipf_catalog(f, g, eta), rr, rc * 1.5, s) >= base - 1e-15);
        if (s < f)
            CHECK(cache_hit_probability(zipf_catalog(f, g, eta), rr, rc, s + 1) >= base - 1e-15);
    }
}

TEST_CASE("uniform popularity makes the cached subset irrelevant") {
    const CatalogModel cat = zipf_catalog(8, 0.0, 0.4);
    const double top = hit_prob_subset(cat, 6.0, 25.0, {1, 2, 3});
    CHECK(hit_prob_subset(cat, 6.0, 25.0, {4, 6, 8}) == doctest::Approx(top).epsilon(1e-14));
    CHECK(hit_prob_subset(cat, 6.0, 25.0, {2, 5, 7}) == doctest::Approx(top).epsilon(1e-14));
    CHECK(cache_hit_probability(cat, 6.0, 25.0, 3) == doctest::Approx(top).epsilon(1e-14));
}

TEST_CASE("caching the most popular ranks maximizes the hit probability") {
    // exhaustive over all C(F, S) subsets for a small catalog
    const long f = 9, s = 4;
    const CatalogModel cat = zipf_catalog(f, 0.9, 0.15);
    const double top_s = cache_hit_probability(cat, 6.0, 30.0, s);
    std::vector<int> pick(static_cast<std::size_t>(s));
    std::vector<bool> mask(static_cast<std::size_t>(f), false);
    std::fill(mask.begin(), mask.begin() + s, true);
    double best = -1.0;
    do {
        std::vector<int> subset;
        for (int i = 0; i < f; ++i)
            if (mask[static_cast<std::size_t>(i)]) subset.push_back(i + 1);
        best = std::max(best, hit_prob_subset(cat, 6.0, 30.0, subset));
    } while (std::prev_permutation(mask.begin(), mask.end()));
    CHECK(top_s == doctest::Approx(best).epsilon(1e-12));
}

TEST_CASE("assign_cache_states_bernoulli: degenerate and typical rates") {
    RandomStream rng(43);
    MarkedNetwork net;
    net.cache_miss.assign(100000, 1);
    net.sbs.assign(100000, Point2D{});
    net.ul = net.sbs;
    net.dl = net.sbs;

    MarkedNetwork all_hit = assign_cache_states_bernoulli(net, 1.0, rng);
    for (auto m : all_hit.cache_miss) CHECK(m == 0);
    MarkedNetwork all_miss = assign_cache_states_bernoulli(net, 0.0, rng);
    for (auto m : all_miss.cache_miss) CHECK(m == 1);

    MarkedNetwork mixed = assign_cache_states_bernoulli(net, 0.35, rng);
    long misses = 0;
    for (auto m : mixed.cache_miss) misses += m;
    const double frac = static_cast<double>(misses) / 100000.0;
    const double se = std::sqrt(0.65 * 0.35 / 100000.0);
    CHECK(std::fabs(frac - 0.65) < 3.0 * se);
}

TEST_CASE("geographic_hit_indicator: empty process and saturated regions") {
    CacheRegions regions{{0.0, 0.0}, 10.0, {0.0, 0.0}, 10.0};
    regions.request_center = Point2D{2.0, 0.0};
    CHECK(geographic_hit_indicator(FileProcess{}, regions, 5, 10).hit_value == 0.0);

    // S = F and radii huge relative to 1/p_F/eta: every rank lands in both
    RandomStream rng(44);
    const CatalogModel cat = zipf_catalog(6, 0.5, 5.0);
    const FileProcess fp = sample_file_process(cat, 60.0, rng);
    CacheRegions big{{0.0, 0.0}, 50.0, {0.0, 0.0}, 50.0};
    const HitReport rep = geographic_hit_indicator(fp, big, 6, 6);
    CHECK(rep.hit_value == doctest::Approx(1.0));
    CHECK(rep.requested.size() == 6);
    CHECK(rep.cached.size() == 6);
}

TEST_CASE("independent-region estimator agrees with the closed form") {
    ScenarioConfig cfg = reference_config();
    const CatalogModel cat = zipf_catalog(cfg.catalog_size, cfg.zipf_gamma, cfg.eta_files);
    const double analytic = cache_hit_probability(cat, cfg.radius_request, cfg.radius_cache,
                                                  cfg.storage_size);
    const McEstimate mc =
        estimate_p_hit_geographic(cfg, GeoMode::independent_regions, 77, 40000, 2);
    CHECK(std::fabs(mc.mean - analytic) < 3.0 * mc.ci_halfwidth);
}

TEST_CASE("independent-region estimator: zero density estimates zero") {
    ScenarioConfig cfg = reference_config();
    cfg.eta_files = 1e-9;
    const McEstimate mc =
        estimate_p_hit_geographic(cfg, GeoMode::independent_regions, 78, 2000, 1);
    CHECK(mc.mean == doctest::Approx(0.0));
}

TEST_CASE("physical-overlap estimator: nested regions dominate the closed form") {
    // With r_dl = 0 and equal radii the two balls coincide, so the shared
    // process gives per-rank hit probability (1 - exp(-mu area)) >= the
    // independent product. Mean hit value must exceed the closed form.
    ScenarioConfig cfg = reference_config();
    cfg.r_dl = 1e-9;  // light up the nested-ball geometry
    cfg.radius_cache = cfg.radius_request;
    cfg.catalog_size = 50;
    cfg.storage_size = 20;
    const CatalogModel cat = zipf_catalog(cfg.catalog_size, cfg.zipf_gamma, cfg.eta_files);
    const double eq9 = cache_hit_probability(cat, cfg.radius_request, cfg.radius_cache,
                                             cfg.storage_size);
    double single = 0.0;  // (1/F) sum_{i<=S} (1 - exp(-mu area))
    for (long i = 0; i < cfg.storage_size; ++i) {
        const double mu = cat.request_probs[static_cast<std::size_t>(i)] * cfg.eta_files;
        single += 1.0 - std::exp(-mu * M_PI * cfg.radius_request * cfg.radius_request);
    }
    single /= static_cast<double>(cfg.catalog_size);

    const McEstimate mc =
        estimate_p_hit_geographic(cfg, GeoMode::physical_overlap, 79, 20000, 2);
    CHECK(std::fabs(mc.mean - single) < 3.0 * mc.ci_halfwidth);
    CHECK(mc.mean > eq9);
}

TEST_CASE("physical-overlap and independent-region modes agree when regions are far apart") {
    // With the request ball far outside the cache ball the shared process
    // cannot couple them, so both modes estimate the same mean.
    ScenarioConfig cfg = reference_config();
    cfg.catalog_size = 30;
    cfg.storage_size = 12;
    cfg.eta_files = 0.3;
    cfg.radius_request = 6.0;
    cfg.radius_cache = 15.0;
    cfg.r_dl = 60.0;  // disjoint balls
    cfg.r_ul = 150.0;
    const McEstimate ind =
        estimate_p_hit_geographic(cfg, GeoMode::independent_regions, 80, 30000, 2);
    const McEstimate phy =
        estimate_p_hit_geographic(cfg, GeoMode::physical_overlap, 81, 30000, 2);
    CHECK(std::fabs(ind.mean - phy.mean) <
          3.0 * std::sqrt(ind.ci_halfwidth * ind.ci_halfwidth +
                          phy.ci_halfwidth * phy.ci_halfwidth));
}
