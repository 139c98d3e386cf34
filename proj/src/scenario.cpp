#include "fdcache/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>

#include "fdcache/units.hpp"

namespace fdcache {

std::vector<std::string> validate(const ScenarioConfig& c) {
    std::vector<std::string> v;
    auto positive = [&](double x, const char* name) {
        if (!(x > 0.0) || !std::isfinite(x))
            v.push_back(std::string(name) + " must be strictly positive");
    };
    positive(c.lambda_sbs, "lambda_sbs");
    positive(c.eta_files, "eta_files");
    positive(c.radius_request, "radius_request");
    positive(c.radius_cache, "radius_cache");
    positive(c.r_ul, "r_ul");
    positive(c.r_dl, "r_dl");
    if (c.catalog_size < 1) v.push_back("catalog_size must be strictly positive");
    if (c.storage_size < 0) v.push_back("storage_size must be >= 0");
    if (c.storage_size >= c.catalog_size)
        v.push_back("storage_size must be < catalog_size");
    if (!(c.zipf_gamma >= 0.0)) v.push_back("zipf_gamma must be >= 0");
    if (!(c.alpha1 > 2.0)) v.push_back("alpha1 must exceed 2");
    if (!(c.alpha2 >= c.alpha1)) v.push_back("alpha2 must be >= alpha1");
    if (std::isfinite(c.r_ul) && std::isfinite(c.r_dl) && !(c.r_ul > c.r_dl))
        v.push_back("r_ul must exceed r_dl");
    if (!std::isfinite(c.rho_ul_dbm)) v.push_back("rho_ul_dbm must be finite");
    if (!std::isfinite(c.rho_dl_dbm)) v.push_back("rho_dl_dbm must be finite");
    if (!std::isfinite(c.theta_db)) v.push_back("theta_db must be finite");
    if (!(c.rician_k >= 0.0)) v.push_back("rician_k must be >= 0");
    if (!(c.si_attenuation_db >= 0.0)) v.push_back("si_attenuation_db must be >= 0");
    if (c.sim_window_radius < 0.0 || !std::isfinite(c.sim_window_radius))
        v.push_back("sim_window_radius must be >= 0 (0 = auto)");
    if (c.n_snapshots < 1) v.push_back("n_snapshots must be strictly positive");
    return v;
}

std::vector<std::string> soft_warnings(const ScenarioConfig& c) {
    std::vector<std::string> w;
    if (c.r_ul > c.r_dl && c.r_ul < 2.0 * c.r_dl)
        w.push_back("r_ul < 2*r_dl: the model assumes the UL link is much longer than the DL link");
    return w;
}

double auto_window_radius(double lambda_sbs) {
    const double r = 6.0 / std::sqrt(lambda_sbs * M_PI);
    return std::max(r, 300.0);
}

double effective_window_radius(const ScenarioConfig& cfg) {
    return cfg.sim_window_radius > 0.0 ? cfg.sim_window_radius
                                       : auto_window_radius(cfg.lambda_sbs);
}

LinkParams derive_link_params(const ScenarioConfig& cfg) {
    LinkParams p;
    p.rho_ul_w = dbm_to_watts(cfg.rho_ul_dbm).watts;
    p.rho_dl_w = dbm_to_watts(cfg.rho_dl_dbm).watts;
    p.theta = db_to_linear(cfg.theta_db);
    p.omega = db_to_linear(cfg.si_attenuation_db);
    return p;
}

const char* to_string(CorrelationMode m) {
    return m == CorrelationMode::correlated ? "correlated" : "uncorrelated";
}
const char* to_string(CacheSamplingMode m) {
    return m == CacheSamplingMode::bernoulli ? "bernoulli" : "geographic";
}

namespace {

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& key, const std::string& raw) {
    std::size_t pos = 0;
    double x;
    try {
        x = std::stod(raw, &pos);
    } catch (const std::exception&) {
        throw std::runtime_error("scenario: bad numeric value for '" + key + "': " + raw);
    }
    if (pos != raw.size())
        throw std::runtime_error("scenario: trailing characters in value for '" + key + "': " + raw);
    return x;
}

long parse_long(const std::string& key, const std::string& raw) {
    const double x = parse_double(key, raw);
    if (x != std::floor(x))
        throw std::runtime_error("scenario: '" + key + "' must be an integer, got " + raw);
    return static_cast<long>(x);
}

}  // namespace

ScenarioConfig parse_scenario(const std::string& text) {
    ScenarioConfig cfg;
    std::map<std::string, bool> seen;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw std::runtime_error("scenario: line " + std::to_string(lineno) + " is not 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (seen.count(key))
            throw std::runtime_error("scenario: duplicate key '" + key + "'");
        seen[key] = true;

        if (key == "lambda_sbs") cfg.lambda_sbs = parse_double(key, val);
        else if (key == "eta_files") cfg.eta_files = parse_double(key, val);
        else if (key == "catalog_size") cfg.catalog_size = parse_long(key, val);
        else if (key == "storage_size") cfg.storage_size = parse_long(key, val);
        else if (key == "zipf_gamma") cfg.zipf_gamma = parse_double(key, val);
        else if (key == "radius_request") cfg.radius_request = parse_double(key, val);
        else if (key == "radius_cache") cfg.radius_cache = parse_double(key, val);
        else if (key == "r_ul") cfg.r_ul = parse_double(key, val);
        else if (key == "r_dl") cfg.r_dl = parse_double(key, val);
        else if (key == "rho_ul_dbm") cfg.rho_ul_dbm = parse_double(key, val);
        else if (key == "rho_dl_dbm") cfg.rho_dl_dbm = parse_double(key, val);
        else if (key == "alpha1") cfg.alpha1 = parse_double(key, val);
        else if (key == "alpha2") cfg.alpha2 = parse_double(key, val);
        else if (key == "theta_db") cfg.theta_db = parse_double(key, val);
        else if (key == "rician_k") cfg.rician_k = parse_double(key, val);
        else if (key == "si_attenuation_db") cfg.si_attenuation_db = parse_double(key, val);
        else if (key == "sim_window_radius") cfg.sim_window_radius = parse_double(key, val);
        else if (key == "n_snapshots") cfg.n_snapshots = parse_long(key, val);
        else if (key == "seed") cfg.seed = static_cast<std::uint64_t>(parse_long(key, val));
        else if (key == "correlation_mode") {
            if (val == "correlated") cfg.correlation_mode = CorrelationMode::correlated;
            else if (val == "uncorrelated") cfg.correlation_mode = CorrelationMode::uncorrelated;
            else throw std::runtime_error("scenario: correlation_mode must be correlated|uncorrelated");
        } else if (key == "cache_sampling_mode") {
            if (val == "bernoulli") cfg.cache_sampling_mode = CacheSamplingMode::bernoulli;
            else if (val == "geographic") cfg.cache_sampling_mode = CacheSamplingMode::geographic;
            else throw std::runtime_error("scenario: cache_sampling_mode must be bernoulli|geographic");
        } else {
            throw std::runtime_error("scenario: unknown key '" + key + "'");
        }
    }

    static const char* required[] = {
        "lambda_sbs", "eta_files", "catalog_size", "storage_size", "zipf_gamma",
        "radius_request", "radius_cache", "r_ul", "r_dl", "rho_ul_dbm", "rho_dl_dbm",
        "alpha1", "alpha2", "theta_db", "rician_k", "si_attenuation_db"};
    for (const char* k : required) {
        if (!seen.count(k))
            throw std::runtime_error(std::string("scenario: missing required key '") + k + "'");
    }
    return cfg;
}

ScenarioConfig load_scenario(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ScenarioIoError("cannot open scenario file: " + path);
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_scenario(buf.str());
}

namespace {
std::string num(double x) {
    char b[64];
    std::snprintf(b, sizeof b, "%.12g", x);
    return b;
}
}  // namespace

std::string format_scenario(const ScenarioConfig& c) {
    std::ostringstream o;
    o << "lambda_sbs = " << num(c.lambda_sbs) << "\n"
      << "eta_files = " << num(c.eta_files) << "\n"
      << "catalog_size = " << c.catalog_size << "\n"
      << "storage_size = " << c.storage_size << "\n"
      << "zipf_gamma = " << num(c.zipf_gamma) << "\n"
      << "radius_request = " << num(c.radius_request) << "\n"
      << "radius_cache = " << num(c.radius_cache) << "\n"
      << "r_ul = " << num(c.r_ul) << "\n"
      << "r_dl = " << num(c.r_dl) << "\n"
      << "rho_ul_dbm = " << num(c.rho_ul_dbm) << "\n"
      << "rho_dl_dbm = " << num(c.rho_dl_dbm) << "\n"
      << "alpha1 = " << num(c.alpha1) << "\n"
      << "alpha2 = " << num(c.alpha2) << "\n"
      << "theta_db = " << num(c.theta_db) << "\n"
      << "rician_k = " << num(c.rician_k) << "\n"
      << "si_attenuation_db = " << num(c.si_attenuation_db) << "\n"
      << "sim_window_radius = " << num(c.sim_window_radius) << "\n"
      << "n_snapshots = " << c.n_snapshots << "\n"
      << "seed = " << c.seed << "\n"
      << "correlation_mode = " << to_string(c.correlation_mode) << "\n"
      << "cache_sampling_mode = " << to_string(c.cache_sampling_mode) << "\n";
    return o.str();
}

}  // namespace fdcache
