#include "fdcache/cli_commands.hpp"

#include <cmath>
#include <sstream>
#include <vector>

#include "fdcache/analytics.hpp"
#include "fdcache/caching.hpp"
#include "fdcache/csv.hpp"
#include "fdcache/montecarlo.hpp"
#include "fdcache/scenario.hpp"

namespace fdcache::cli {

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kIo = 2;
constexpr int kNumeric = 3;

// Returns kUsage/kIo on failure and reports to err; loaded config in *cfg.
int load_and_validate(const std::string& path, ScenarioConfig* cfg, std::ostream& err) {
    try {
        *cfg = load_scenario(path);
    } catch (const ScenarioIoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    const auto violations = validate(*cfg);
    if (!violations.empty()) {
        for (const auto& v : violations) err << "violation: " << v << "\n";
        return kUsage;
    }
    return kOk;
}

const std::vector<std::string> kScenarioCols = {
    "lambda_sbs", "eta_files", "catalog_size", "storage_size", "zipf_gamma",
    "radius_request", "radius_cache", "r_ul", "r_dl", "rho_ul_dbm", "rho_dl_dbm",
    "alpha1", "alpha2", "theta_db", "rician_k", "si_attenuation_db"};

std::vector<std::string> scenario_cells(const ScenarioConfig& c) {
    return {csv_num(c.lambda_sbs), csv_num(c.eta_files), std::to_string(c.catalog_size),
            std::to_string(c.storage_size), csv_num(c.zipf_gamma), csv_num(c.radius_request),
            csv_num(c.radius_cache), csv_num(c.r_ul), csv_num(c.r_dl), csv_num(c.rho_ul_dbm),
            csv_num(c.rho_dl_dbm), csv_num(c.alpha1), csv_num(c.alpha2), csv_num(c.theta_db),
            csv_num(c.rician_k), csv_num(c.si_attenuation_db)};
}

std::vector<std::string> concat(std::vector<std::string> a, const std::vector<std::string>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

struct SweepSpec {
    std::string parameter;
    std::vector<double> values;
    std::vector<std::string> engines;
};

std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::istringstream in(s);
    std::string tok;
    while (std::getline(in, tok, sep))
        if (!tok.empty()) out.push_back(tok);
    return out;
}

SweepSpec parse_sweep(const std::string& sweep_arg, const std::string& engines_arg) {
    SweepSpec spec;
    const auto eq = sweep_arg.find('=');
    if (eq == std::string::npos)
        throw std::runtime_error("sweep: expected KEY=v1,v2,... got '" + sweep_arg + "'");
    spec.parameter = sweep_arg.substr(0, eq);
    if (spec.parameter != "lambda_sbs" && spec.parameter != "eta_files" &&
        spec.parameter != "theta_db" && spec.parameter != "kappa")
        throw std::runtime_error("sweep: parameter must be one of lambda_sbs, eta_files, theta_db, kappa");
    const std::string vals = sweep_arg.substr(eq + 1);
    if (vals.rfind("logspace:", 0) == 0) {
        const auto parts = split_list(vals.substr(9), ':');
        if (parts.size() != 3) throw std::runtime_error("sweep: logspace wants logspace:a:b:n");
        const double a = std::stod(parts[0]);
        const double b = std::stod(parts[1]);
        const long n = std::stol(parts[2]);
        if (!(a > 0.0) || !(b > 0.0) || n < 2)
            throw std::runtime_error("sweep: logspace endpoints must be positive, n >= 2");
        for (long i = 0; i < n; ++i)
            spec.values.push_back(std::pow(10.0, std::log10(a) + (std::log10(b) - std::log10(a)) *
                                                     static_cast<double>(i) /
                                                     static_cast<double>(n - 1)));
    } else {
        for (const auto& v : split_list(vals, ','))
            spec.values.push_back(std::stod(v));
    }
    if (spec.values.empty()) throw std::runtime_error("sweep: empty values list");
    spec.engines = split_list(engines_arg, ',');
    if (spec.engines.empty()) throw std::runtime_error("sweep: empty engines list");
    for (const auto& e : spec.engines)
        if (e != "analytic" && e != "montecarlo")
            throw std::runtime_error("sweep: unknown engine '" + e + "'");
    return spec;
}

ScenarioConfig apply_sweep_value(ScenarioConfig cfg, const std::string& parameter, double value) {
    if (parameter == "lambda_sbs") {
        cfg.lambda_sbs = value;
    } else if (parameter == "eta_files") {
        cfg.eta_files = value;
    } else if (parameter == "theta_db") {
        cfg.theta_db = value;
    } else {  // kappa
        if (!(value >= 0.0 && value < 1.0))
            throw std::runtime_error("sweep: kappa values must lie in [0,1)");
        cfg.storage_size = std::lround(value * static_cast<double>(cfg.catalog_size));
        if (cfg.storage_size >= cfg.catalog_size) cfg.storage_size = cfg.catalog_size - 1;
    }
    return cfg;
}

}  // namespace

int cmd_validate(const std::string& scenario_path, std::ostream& out, std::ostream& err) {
    ScenarioConfig cfg;
    try {
        cfg = load_scenario(scenario_path);
    } catch (const ScenarioIoError& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    const auto violations = validate(cfg);
    for (const auto& v : violations) out << "violation: " << v << "\n";
    for (const auto& w : soft_warnings(cfg)) out << "warning: " << w << "\n";
    if (!violations.empty()) return kUsage;
    out << "ok\n";
    return kOk;
}

int cmd_analytic(const std::string& scenario_path, const std::string& out_csv,
                 std::ostream& err) {
    ScenarioConfig cfg;
    if (int rc = load_and_validate(scenario_path, &cfg, err); rc != kOk) return rc;
    AnalyticReport rep;
    try {
        rep = analytic_report(cfg);
    } catch (const NumericError& e) {
        err << "numeric failure in " << e.component << ": " << e.what()
            << " (partial=" << e.partial << ")\n";
        return kNumeric;
    }
    try {
        CsvWriter csv(out_csv);
        csv.header(concat(kScenarioCols,
                          {"p_hit", "p_suc_lower", "outage", "ase", "tg_fd", "laplace_i_dx",
                           "laplace_i_x_miss", "laplace_i_dx_miss", "s_ul", "s_dl"}));
        csv.row(concat(scenario_cells(cfg),
                       {csv_num(rep.p_hit), csv_num(rep.p_suc_lower), csv_num(rep.outage),
                        csv_num(rep.ase), csv_num(rep.tg_fd), csv_num(rep.l_dx),
                        csv_num(rep.l_x_miss), csv_num(rep.l_dx_miss), csv_num(rep.s_ul),
                        csv_num(rep.s_dl)}));
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}

int cmd_simulate(const SimulateOptions& opt, std::ostream& err) {
    ScenarioConfig cfg;
    if (int rc = load_and_validate(opt.scenario_path, &cfg, err); rc != kOk) return rc;
    if (opt.mode) {
        if (*opt.mode == "correlated") cfg.correlation_mode = CorrelationMode::correlated;
        else if (*opt.mode == "uncorrelated") cfg.correlation_mode = CorrelationMode::uncorrelated;
        else {
            err << "error: --mode must be correlated or uncorrelated\n";
            return kUsage;
        }
    }
    if (opt.seed) cfg.seed = *opt.seed;
    if (opt.snapshots) cfg.n_snapshots = *opt.snapshots;
    if (cfg.n_snapshots < 100) {
        err << "error: simulate needs at least 100 snapshots\n";
        return kUsage;
    }

    const CatalogModel cat = zipf_catalog(cfg.catalog_size, cfg.zipf_gamma, cfg.eta_files);
    const double p_hit =
        cache_hit_probability(cat, cfg.radius_request, cfg.radius_cache, cfg.storage_size);
    const LinkParams lp = derive_link_params(cfg);

    try {
        const McEstimate p_suc = estimate_p_suc(cfg, p_hit, cfg.correlation_mode, cfg.seed,
                                                cfg.n_snapshots, opt.workers);
        const McEstimate p_hit_mc = estimate_p_hit_geographic(
            cfg, GeoMode::independent_regions, cfg.seed, cfg.n_snapshots, opt.workers);
        const double tg_scale = fd_throughput_gain(lp.theta, cfg.lambda_sbs, 1.0, cfg.r_ul,
                                                   cfg.r_dl, cfg.alpha1);

        CsvWriter csv(opt.out_csv);
        csv.header({"estimand", "mode", "mean", "ci_halfwidth", "n", "seed", "lambda_sbs",
                    "eta_files", "theta_db", "storage_size", "catalog_size", "p_hit_analytic"});
        const std::string mode = to_string(cfg.correlation_mode);
        auto context = [&]() -> std::vector<std::string> {
            return {csv_num(cfg.lambda_sbs), csv_num(cfg.eta_files), csv_num(cfg.theta_db),
                    std::to_string(cfg.storage_size), std::to_string(cfg.catalog_size),
                    csv_num(p_hit)};
        };
        csv.row(concat({"p_suc", mode, csv_num(p_suc.mean), csv_num(p_suc.ci_halfwidth),
                        std::to_string(p_suc.n), std::to_string(p_suc.seed)},
                       context()));
        csv.row(concat({"p_hit_mc", "independent_regions", csv_num(p_hit_mc.mean),
                        csv_num(p_hit_mc.ci_halfwidth), std::to_string(p_hit_mc.n),
                        std::to_string(p_hit_mc.seed)},
                       context()));
        csv.row(concat({"tg_fd", mode, csv_num(tg_scale * p_suc.mean),
                        csv_num(tg_scale * p_suc.ci_halfwidth), std::to_string(p_suc.n),
                        std::to_string(p_suc.seed)},
                       context()));

        if (!opt.dump_snapshot.empty()) {
            RandomStream rng = split_stream(cfg.seed, 0);
            dump_snapshot_csv(run_snapshot(cfg, p_hit, rng), opt.dump_snapshot);
        }
        if (!opt.dump_samples.empty())
            dump_samples_csv(cfg, p_hit, cfg.seed, std::min<long>(cfg.n_snapshots, 10000),
                             opt.dump_samples);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}

int cmd_sweep(const SweepOptions& opt, std::ostream& err) {
    ScenarioConfig base;
    if (int rc = load_and_validate(opt.scenario_path, &base, err); rc != kOk) return rc;
    SweepSpec spec;
    try {
        spec = parse_sweep(opt.sweep, opt.engines);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    if (opt.seed) base.seed = *opt.seed;
    if (opt.snapshots) base.n_snapshots = *opt.snapshots;

    try {
        CsvWriter csv(opt.out_csv);
        csv.header({"parameter", "value", "engine", "status", "lambda_sbs", "eta_files",
                    "theta_db", "storage_size", "catalog_size", "radius_request",
                    "radius_cache", "zipf_gamma", "p_hit", "p_suc_lower", "outage", "ase",
                    "tg_fd", "laplace_i_dx", "laplace_i_x_miss", "laplace_i_dx_miss",
                    "mc_p_suc", "mc_ci_halfwidth", "mc_n", "mc_seed", "mc_mode", "p_hit_mc",
                    "p_hit_mc_ci", "tg_fd_mc"});
        for (std::size_t vi = 0; vi < spec.values.size(); ++vi) {
            const double value = spec.values[vi];
            for (const auto& engine : spec.engines) {
                std::vector<std::string> row = {spec.parameter, csv_num(value), engine};
                std::string status = "ok";
                std::vector<std::string> analytic_cells(8, "");
                std::vector<std::string> mc_cells(8, "");
                std::vector<std::string> ctx(8, "");
                ScenarioConfig cfg;
                try {
                    cfg = apply_sweep_value(base, spec.parameter, value);
                    cfg.seed = base.seed + static_cast<std::uint64_t>(vi);
                    const auto violations = validate(cfg);
                    if (!violations.empty())
                        throw std::runtime_error("invalid point: " + violations.front());
                    ctx = {csv_num(cfg.lambda_sbs),
                           csv_num(cfg.eta_files),
                           csv_num(cfg.theta_db),
                           std::to_string(cfg.storage_size),
                           std::to_string(cfg.catalog_size),
                           csv_num(cfg.radius_request),
                           csv_num(cfg.radius_cache),
                           csv_num(cfg.zipf_gamma)};
                    if (engine == "analytic") {
                        const AnalyticReport rep = analytic_report(cfg);
                        analytic_cells = {csv_num(rep.p_hit),     csv_num(rep.p_suc_lower),
                                          csv_num(rep.outage),    csv_num(rep.ase),
                                          csv_num(rep.tg_fd),     csv_num(rep.l_dx),
                                          csv_num(rep.l_x_miss),  csv_num(rep.l_dx_miss)};
                    } else {
                        const CatalogModel cat =
                            zipf_catalog(cfg.catalog_size, cfg.zipf_gamma, cfg.eta_files);
                        const double p_hit = cache_hit_probability(
                            cat, cfg.radius_request, cfg.radius_cache, cfg.storage_size);
                        const LinkParams lp = derive_link_params(cfg);
                        const McEstimate ps = estimate_p_suc(cfg, p_hit, cfg.correlation_mode,
                                                             cfg.seed, cfg.n_snapshots,
                                                             opt.workers);
                        const McEstimate ph = estimate_p_hit_geographic(
                            cfg, GeoMode::independent_regions, cfg.seed, cfg.n_snapshots,
                            opt.workers);
                        const double tg_scale = fd_throughput_gain(
                            lp.theta, cfg.lambda_sbs, 1.0, cfg.r_ul, cfg.r_dl, cfg.alpha1);
                        mc_cells = {csv_num(ps.mean),
                                    csv_num(ps.ci_halfwidth),
                                    std::to_string(ps.n),
                                    std::to_string(ps.seed),
                                    to_string(cfg.correlation_mode),
                                    csv_num(ph.mean),
                                    csv_num(ph.ci_halfwidth),
                                    csv_num(tg_scale * ps.mean)};
                    }
                } catch (const NumericError& e) {
                    status = "error:" + e.component;
                } catch (const std::exception&) {
                    status = "error:invalid_point";
                }
                row.push_back(status);
                row = concat(std::move(row), ctx);
                row = concat(std::move(row), analytic_cells);
                row = concat(std::move(row), mc_cells);
                csv.row(row);
            }
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kIo;
    }
    return kOk;
}

}  // namespace fdcache::cli
