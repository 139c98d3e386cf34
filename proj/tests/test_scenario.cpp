#include <doctest.h>

#include <cmath>

#include "fdcache/scenario.hpp"

using namespace fdcache;

namespace {

// Reference parameter set used throughout the tests (densities and catalog
// chosen to keep simulations light unless stated otherwise).
std::string table_scenario_text() {
    return "# reference scenario\n"
           "lambda_sbs = 5e-4\n"
           "eta_files = 1\n"
           "catalog_size = 100\n"
           "storage_size = 35\n"
           "zipf_gamma = 0.7\n"
           "radius_request = 8\n"
           "radius_cache = 40\n"
           "r_ul = 20\n"
           "r_dl = 5\n"
           "rho_ul_dbm = 30\n"
           "rho_dl_dbm = 24\n"
           "alpha1 = 3\n"
           "alpha2 = 4\n"
           "theta_db = 0\n"
           "rician_k = 1\n"
           "si_attenuation_db = 60\n";
}

}  // namespace

TEST_CASE("reference scenario validates cleanly") {
    const ScenarioConfig cfg = parse_scenario(table_scenario_text());
    CHECK(validate(cfg).empty());
    CHECK(cfg.lambda_sbs == doctest::Approx(5e-4));
    CHECK(cfg.catalog_size == 100);
    CHECK(cfg.n_snapshots == 10000);  // default
    CHECK(cfg.correlation_mode == CorrelationMode::correlated);
}

TEST_CASE("validate flags boundary violations by field name") {
    ScenarioConfig cfg = parse_scenario(table_scenario_text());
    cfg.alpha1 = 2.0;
    auto v = validate(cfg);
    REQUIRE(v.size() >= 1);
    bool found = false;
    for (const auto& m : v)
        if (m.find("alpha1") != std::string::npos) found = true;
    CHECK(found);

    cfg = parse_scenario(table_scenario_text());
    cfg.storage_size = cfg.catalog_size;
    v = validate(cfg);
    found = false;
    for (const auto& m : v)
        if (m.find("storage_size must be < catalog_size") != std::string::npos) found = true;
    CHECK(found);
}

TEST_CASE("validate is pure and deterministic") {
    ScenarioConfig cfg = parse_scenario(table_scenario_text());
    cfg.alpha1 = 1.5;
    cfg.r_dl = 30.0;  // also breaks r_ul > r_dl
    const auto v1 = validate(cfg);
    const auto v2 = validate(cfg);
    CHECK(v1 == v2);
    CHECK(v1.size() >= 2);
}

TEST_CASE("storage_size zero is a legal cache-free configuration") {
    ScenarioConfig cfg = parse_scenario(table_scenario_text());
    cfg.storage_size = 0;
    CHECK(validate(cfg).empty());
}

TEST_CASE("unknown key, duplicate key, and malformed lines are errors") {
    CHECK_THROWS_WITH_AS(parse_scenario(table_scenario_text() + "bogus_key = 3\n"),
                         doctest::Contains("unknown key"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_scenario(table_scenario_text() + "alpha1 = 3\n"),
                         doctest::Contains("duplicate"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_scenario("lambda_sbs 5e-4\n"),
                         doctest::Contains("key = value"), std::runtime_error);
    CHECK_THROWS_WITH_AS(parse_scenario("lambda_sbs = fast\n"),
                         doctest::Contains("bad numeric"), std::runtime_error);
}

TEST_CASE("missing required keys are named") {
    CHECK_THROWS_WITH_AS(parse_scenario("lambda_sbs = 5e-4\n"),
                         doctest::Contains("missing required key"), std::runtime_error);
}

TEST_CASE("round-trip: format then parse preserves every field") {
    ScenarioConfig cfg = parse_scenario(table_scenario_text());
    cfg.seed = 987654321;
    cfg.n_snapshots = 12345;
    cfg.sim_window_radius = 777.5;
    cfg.correlation_mode = CorrelationMode::uncorrelated;
    cfg.cache_sampling_mode = CacheSamplingMode::geographic;
    const ScenarioConfig back = parse_scenario(format_scenario(cfg));
    CHECK(back.lambda_sbs == cfg.lambda_sbs);
    CHECK(back.seed == cfg.seed);
    CHECK(back.n_snapshots == cfg.n_snapshots);
    CHECK(back.sim_window_radius == cfg.sim_window_radius);
    CHECK(back.correlation_mode == cfg.correlation_mode);
    CHECK(back.cache_sampling_mode == cfg.cache_sampling_mode);
    CHECK(back.rho_dl_dbm == cfg.rho_dl_dbm);
}

TEST_CASE("window radius rule: 6/sqrt(lambda pi) floored at 300 m") {
    CHECK(auto_window_radius(5e-4) == doctest::Approx(300.0));  // 151.4 -> floor
    CHECK(auto_window_radius(1e-4) == doctest::Approx(6.0 / std::sqrt(1e-4 * M_PI)));
    ScenarioConfig cfg = parse_scenario(table_scenario_text());
    CHECK(effective_window_radius(cfg) == doctest::Approx(300.0));
    cfg.sim_window_radius = 1000.0;
    CHECK(effective_window_radius(cfg) == doctest::Approx(1000.0));
}

TEST_CASE("short UL links warn but do not invalidate") {
    ScenarioConfig cfg = parse_scenario(table_scenario_text());
    cfg.r_ul = 8.0;  // > r_dl but < 2 r_dl
    CHECK(validate(cfg).empty());
    CHECK(soft_warnings(cfg).size() == 1);
    cfg.r_ul = 20.0;
    CHECK(soft_warnings(cfg).empty());
}

TEST_CASE("linear link parameters derive from the dB boundary") {
    const ScenarioConfig cfg = parse_scenario(table_scenario_text());
    const LinkParams lp = derive_link_params(cfg);
    CHECK(lp.rho_ul_w == doctest::Approx(1.0));
    CHECK(lp.rho_dl_w == doctest::Approx(0.251188643150958));
    CHECK(lp.theta == doctest::Approx(1.0));
    CHECK(lp.omega == doctest::Approx(1e6));
}
