#include "fdcache/montecarlo.hpp"

#include <cmath>
#include <stdexcept>

#include "fdcache/channel.hpp"
#include "fdcache/csv.hpp"
#include "fdcache/parallel.hpp"
#include "fdcache/units.hpp"

namespace fdcache {

namespace {

// r^-alpha from the squared distance; integer exponents skip pow().
inline double inv_power_d2(double d2, double alpha) {
    if (alpha == 3.0) return 1.0 / (d2 * std::sqrt(d2));
    if (alpha == 4.0) return 1.0 / (d2 * d2);
    return std::pow(d2, -0.5 * alpha);
}

inline double sqdist(const Point2D& a, const Point2D& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return dx * dx + dy * dy;
}

// Geographic cache states: one shared file process over the window (plus a
// margin covering every request/cache ball), spatially bucketed; each cell
// draws a uniform catalog rank and hits iff that rank has a point in both
// its request ball and its cache ball (rank <= S).
struct FileGrid {
    double cell = 1.0;
    double extent = 1.0;
    int ncols = 1;
    std::vector<std::vector<int>> buckets;

    FileGrid(const FileProcess& fp, double extent_, double cell_)
        : cell(cell_), extent(extent_) {
        ncols = std::max(1, static_cast<int>(std::ceil(2.0 * extent / cell)));
        buckets.resize(static_cast<std::size_t>(ncols) * static_cast<std::size_t>(ncols));
        for (int k = 0; k < static_cast<int>(fp.points.size()); ++k)
            buckets[cell_of(fp.points[static_cast<std::size_t>(k)])].push_back(k);
    }

    std::size_t cell_of(const Point2D& p) const {
        int ix = static_cast<int>((p.x + extent) / cell);
        int iy = static_cast<int>((p.y + extent) / cell);
        ix = std::min(std::max(ix, 0), ncols - 1);
        iy = std::min(std::max(iy, 0), ncols - 1);
        return static_cast<std::size_t>(iy) * static_cast<std::size_t>(ncols) +
               static_cast<std::size_t>(ix);
    }

    template <typename F>
    void for_each_near(const Point2D& p, F&& fn) const {
        int ix = static_cast<int>((p.x + extent) / cell);
        int iy = static_cast<int>((p.y + extent) / cell);
        for (int dy = -1; dy <= 1; ++dy)
            for (int dx = -1; dx <= 1; ++dx) {
                const int cx = ix + dx, cy = iy + dy;
                if (cx < 0 || cy < 0 || cx >= ncols || cy >= ncols) continue;
                for (int k : buckets[static_cast<std::size_t>(cy) * static_cast<std::size_t>(ncols) +
                                     static_cast<std::size_t>(cx)])
                    fn(k);
            }
    }
};

bool geographic_miss_state(const FileProcess& fp, const FileGrid& grid,
                           const Point2D& sbs, const Point2D& dl,
                           const ScenarioConfig& cfg, RandomStream& rng) {
    const long rank = 1 + static_cast<long>(rng.uniform01() * static_cast<double>(cfg.catalog_size));
    const double rr2 = cfg.radius_request * cfg.radius_request;
    const double rc2 = cfg.radius_cache * cfg.radius_cache;
    bool requested = false, cached = false;
    grid.for_each_near(dl, [&](int k) {
        if (fp.file_index[static_cast<std::size_t>(k)] == rank &&
            sqdist(fp.points[static_cast<std::size_t>(k)], dl) <= rr2)
            requested = true;
    });
    if (rank <= cfg.storage_size) {
        grid.for_each_near(sbs, [&](int k) {
            if (fp.file_index[static_cast<std::size_t>(k)] == rank &&
                sqdist(fp.points[static_cast<std::size_t>(k)], sbs) <= rc2)
                cached = true;
        });
    }
    return !(requested && cached && rank <= cfg.storage_size);
}

// Field sampling shared by both hops. Draw order: SBS positions, marks,
// cache states, then per-interferer fading (toward the SBS, then toward the
// DL node; UL-node gains only where that cell misses). In geographic mode
// the file process and all cache states (including the typical cell's,
// returned through snap.typical_miss) are drawn here instead.
void sample_field(const ScenarioConfig& cfg, double p_hit, RandomStream& rng,
                  Snapshot& snap, bool field_states_only) {
    const double window = effective_window_radius(cfg);
    snap.network = attach_marks(sample_ppp(cfg.lambda_sbs, window, rng), cfg.r_ul,
                                cfg.r_dl, rng);
    const std::size_t m = snap.network.sbs.size();

    if (cfg.cache_sampling_mode == CacheSamplingMode::bernoulli) {
        for (auto& miss : snap.network.cache_miss) miss = rng.bernoulli(1.0 - p_hit) ? 1 : 0;
    } else {
        const CatalogModel cat = zipf_catalog(cfg.catalog_size, cfg.zipf_gamma, cfg.eta_files);
        const double margin = std::max(cfg.radius_cache, cfg.r_dl + cfg.radius_request);
        const double extent = window + cfg.r_ul + margin;
        snap.files = sample_file_process(cat, extent, rng);
        const FileGrid grid(snap.files, extent, std::max(cfg.radius_request, cfg.radius_cache));
        for (std::size_t i = 0; i < m; ++i)
            snap.network.cache_miss[i] =
                geographic_miss_state(snap.files, grid, snap.network.sbs[i],
                                      snap.network.dl[i], cfg, rng)
                    ? 1
                    : 0;
        if (!field_states_only) {
            snap.typical_miss = geographic_miss_state(
                snap.files, grid, Point2D{0.0, 0.0}, Point2D{cfg.r_dl, 0.0}, cfg, rng);
        }
    }

    snap.h_sbs_x.resize(m);
    snap.h_ul_x.resize(m);
    snap.h_sbs_dl.resize(m);
    snap.h_ul_dl.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const bool miss = snap.network.cache_miss[i] != 0;
        snap.h_sbs_x[i] = rng.exponential();
        snap.h_ul_x[i] = miss ? rng.exponential() : 0.0;
        snap.h_sbs_dl[i] = rng.exponential();
        snap.h_ul_dl[i] = miss ? rng.exponential() : 0.0;
    }
}

double field_interference_at_sbs(const Snapshot& snap, const ScenarioConfig& cfg,
                                 const LinkParams& lp) {
    const Point2D origin{0.0, 0.0};
    double sum = 0.0;
    const std::size_t m = snap.network.sbs.size();
    for (std::size_t i = 0; i < m; ++i) {
        sum += lp.rho_dl_w * inv_power_d2(sqdist(snap.network.sbs[i], origin), cfg.alpha1) *
               snap.h_sbs_x[i];
        if (snap.network.cache_miss[i])
            sum += lp.rho_ul_w * inv_power_d2(sqdist(snap.network.ul[i], origin), cfg.alpha1) *
                   snap.h_ul_x[i];
    }
    return sum;
}

double field_interference_at_dl(const Snapshot& snap, const ScenarioConfig& cfg,
                                const LinkParams& lp) {
    const Point2D d{cfg.r_dl, 0.0};
    double sum = 0.0;
    const std::size_t m = snap.network.sbs.size();
    for (std::size_t i = 0; i < m; ++i) {
        sum += lp.rho_dl_w * inv_power_d2(sqdist(snap.network.sbs[i], d), cfg.alpha1) *
               snap.h_sbs_dl[i];
        if (snap.network.cache_miss[i])
            sum += lp.rho_ul_w * inv_power_d2(sqdist(snap.network.ul[i], d), cfg.alpha2) *
                   snap.h_ul_dl[i];
    }
    return sum;
}

double ini_term(const Snapshot& snap, const ScenarioConfig& cfg, const LinkParams& lp) {
    const Point2D ux{cfg.r_ul * std::cos(snap.ux_angle), cfg.r_ul * std::sin(snap.ux_angle)};
    const Point2D d{cfg.r_dl, 0.0};
    return lp.rho_ul_w * inv_power_d2(sqdist(ux, d), cfg.alpha2) * snap.h_ini;
}

Snapshot run_snapshot_impl(const ScenarioConfig& cfg, double p_hit, RandomStream& rng,
                           bool force_miss) {
    const LinkParams lp = derive_link_params(cfg);
    Snapshot snap;
    if (cfg.cache_sampling_mode == CacheSamplingMode::bernoulli)
        snap.typical_miss = force_miss ? true : rng.bernoulli(1.0 - p_hit);
    snap.ux_angle = rng.uniform(0.0, 2.0 * M_PI);
    snap.h_useful_dl = rng.exponential();
    snap.h_useful_ul = rng.exponential();
    sample_field(cfg, p_hit, rng, snap, /*field_states_only=*/false);
    if (cfg.cache_sampling_mode == CacheSamplingMode::geographic && force_miss)
        snap.typical_miss = true;
    if (snap.typical_miss) {
        snap.h_ini = rng.exponential();
        snap.h_si = sample_si_power(si_gamma_params(cfg.rician_k, lp.omega), rng);
    }
    const double i_dl = interference_at_dl(snap, cfg);
    snap.sir_dl = lp.rho_dl_w * inv_power_d2(cfg.r_dl * cfg.r_dl, cfg.alpha1) *
                  snap.h_useful_dl / i_dl;
    if (snap.typical_miss) {
        const double i_x = interference_at_sbs(snap, cfg);
        snap.sir_ul = lp.rho_ul_w * inv_power_d2(cfg.r_ul * cfg.r_ul, cfg.alpha1) *
                      snap.h_useful_ul / i_x;
    }
    return snap;
}

}  // namespace

double interference_at_sbs(const Snapshot& snap, const ScenarioConfig& cfg) {
    const LinkParams lp = derive_link_params(cfg);
    double sum = field_interference_at_sbs(snap, cfg, lp);
    if (snap.typical_miss) sum += lp.rho_dl_w * snap.h_si;
    return sum;
}

double interference_at_dl(const Snapshot& snap, const ScenarioConfig& cfg) {
    const LinkParams lp = derive_link_params(cfg);
    double sum = field_interference_at_dl(snap, cfg, lp);
    if (snap.typical_miss) sum += ini_term(snap, cfg, lp);
    return sum;
}

Snapshot run_snapshot(const ScenarioConfig& cfg, double p_hit, RandomStream& rng) {
    if (!(p_hit >= 0.0 && p_hit <= 1.0))
        throw std::invalid_argument("run_snapshot: p_hit must be in [0,1]");
    return run_snapshot_impl(cfg, p_hit, rng, false);
}

McEstimate estimate_p_suc(const ScenarioConfig& cfg, double p_hit, CorrelationMode mode,
                          std::uint64_t seed, long n, int workers) {
    if (n < 100) throw std::invalid_argument("estimate_p_suc: needs at least 100 snapshots");
    const LinkParams lp = derive_link_params(cfg);
    const double theta = lp.theta;
    std::vector<double> values(static_cast<std::size_t>(n), 0.0);

    parallel_for(n, workers, [&](long i) {
        RandomStream rng = split_stream(seed, static_cast<std::uint64_t>(i));
        bool ok;
        if (mode == CorrelationMode::correlated) {
            const Snapshot snap = run_snapshot_impl(cfg, p_hit, rng, false);
            ok = snap.typical_miss ? (snap.sir_ul > theta && snap.sir_dl > theta)
                                   : (snap.sir_dl > theta);
        } else {
            // DL hop on the first field; UL hop on an independent redraw of
            // the interferer field, keeping the typical draws fixed.
            const Snapshot snap = run_snapshot_impl(cfg, p_hit, rng, false);
            ok = snap.sir_dl > theta;
            if (snap.typical_miss && ok) {
                Snapshot ul_field;
                ul_field.typical_miss = true;
                ul_field.ux_angle = snap.ux_angle;
                ul_field.h_useful_ul = snap.h_useful_ul;
                sample_field(cfg, p_hit, rng, ul_field, /*field_states_only=*/true);
                ul_field.h_si = sample_si_power(si_gamma_params(cfg.rician_k, lp.omega), rng);
                const double i_x = interference_at_sbs(ul_field, cfg);
                const double sir_ul = lp.rho_ul_w *
                                      inv_power_d2(cfg.r_ul * cfg.r_ul, cfg.alpha1) *
                                      snap.h_useful_ul / i_x;
                ok = sir_ul > theta;
            } else if (snap.typical_miss) {
                ok = false;
            }
        }
        values[static_cast<std::size_t>(i)] = ok ? 1.0 : 0.0;
    });
    return make_estimate(values, seed);
}

McEstimate estimate_laplace(const ScenarioConfig& cfg, double p_hit, double s,
                            LaplaceTarget target, std::uint64_t seed, long n,
                            int workers, bool force_miss) {
    if (!(s >= 0.0)) throw std::invalid_argument("estimate_laplace: s must be >= 0");
    if (n < 1) throw std::invalid_argument("estimate_laplace: needs at least one snapshot");
    const LinkParams lp = derive_link_params(cfg);
    const double nan = std::nan("");
    std::vector<double> values(static_cast<std::size_t>(n), nan);

    parallel_for(n, workers, [&](long i) {
        RandomStream rng = split_stream(seed, static_cast<std::uint64_t>(i));
        const bool force = force_miss && target != LaplaceTarget::i_dx;
        const Snapshot snap = run_snapshot_impl(cfg, p_hit, rng, force);
        double value = nan;
        switch (target) {
            case LaplaceTarget::i_dx:
                // field-only interference at the DL node (no own-cell term)
                value = std::exp(-s * field_interference_at_dl(snap, cfg, lp));
                break;
            case LaplaceTarget::i_x_miss:
                if (snap.typical_miss)
                    value = std::exp(-s * interference_at_sbs(snap, cfg));
                break;
            case LaplaceTarget::i_dx_miss:
                if (snap.typical_miss)
                    value = std::exp(-s * interference_at_dl(snap, cfg));
                break;
        }
        values[static_cast<std::size_t>(i)] = value;
    });

    std::vector<double> kept;
    kept.reserve(values.size());
    for (double v : values)
        if (!std::isnan(v)) kept.push_back(v);
    return make_estimate(kept, seed);
}

void dump_snapshot_csv(const Snapshot& snap, const std::string& path) {
    CsvWriter csv(path);
    csv.header({"kind", "index", "x", "y", "mark"});
    const auto& net = snap.network;
    for (std::size_t i = 0; i < net.sbs.size(); ++i)
        csv.row({"sbs", std::to_string(i), csv_num(net.sbs[i].x), csv_num(net.sbs[i].y),
                 std::to_string(static_cast<int>(net.cache_miss[i]))});
    for (std::size_t i = 0; i < net.ul.size(); ++i)
        csv.row({"ul", std::to_string(i), csv_num(net.ul[i].x), csv_num(net.ul[i].y), "0"});
    for (std::size_t i = 0; i < net.dl.size(); ++i)
        csv.row({"dl", std::to_string(i), csv_num(net.dl[i].x), csv_num(net.dl[i].y), "0"});
    for (std::size_t k = 0; k < snap.files.points.size(); ++k)
        csv.row({"file", std::to_string(k), csv_num(snap.files.points[k].x),
                 csv_num(snap.files.points[k].y), std::to_string(snap.files.file_index[k])});
}

void dump_samples_csv(const ScenarioConfig& cfg, double p_hit, std::uint64_t seed,
                      long n, const std::string& path) {
    const LinkParams lp = derive_link_params(cfg);
    CsvWriter csv(path);
    csv.header({"snapshot_index", "typical_miss", "sir_ul_db", "sir_dl_db", "success"});
    for (long i = 0; i < n; ++i) {
        RandomStream rng = split_stream(seed, static_cast<std::uint64_t>(i));
        const Snapshot snap = run_snapshot_impl(cfg, p_hit, rng, false);
        const bool ok = snap.typical_miss
                            ? (snap.sir_ul > lp.theta && snap.sir_dl > lp.theta)
                            : (snap.sir_dl > lp.theta);
        csv.row({std::to_string(i), snap.typical_miss ? "1" : "0",
                 snap.typical_miss ? csv_num(linear_to_db(snap.sir_ul)) : "",
                 csv_num(linear_to_db(snap.sir_dl)), ok ? "1" : "0"});
    }
}

}  // namespace fdcache
