#include "fdcache/analytics.hpp"

#include <cmath>
#include <stdexcept>

#include "fdcache/caching.hpp"

namespace fdcache {

double upsilon_hat(double s, double rho_dl_w, double alpha1) {
    if (!(alpha1 > 2.0)) throw std::invalid_argument("upsilon_hat: alpha1 must exceed 2");
    if (!(s >= 0.0)) throw std::invalid_argument("upsilon_hat: s must be >= 0");
    if (s == 0.0 || rho_dl_w == 0.0) return 0.0;
    return M_PI * std::pow(s * rho_dl_w, 2.0 / alpha1) / std::sin(2.0 * M_PI / alpha1) / alpha1;
}

double xi(double s, double r, double rho_ul_w, double r_ul, double alpha_ul,
          const QuadraturePolicy& policy) {
    if (!(alpha_ul > 2.0)) throw std::invalid_argument("xi: exponent must exceed 2");
    if (!(s >= 0.0) || !(r >= 0.0)) throw std::invalid_argument("xi: s and r must be >= 0");
    const double c = s * rho_ul_w;
    if (c == 0.0) return 1.0;
    if (r == 0.0) return 1.0 / (1.0 + c * std::pow(r_ul, -alpha_ul));
    auto f = [&](double phi) {
        const double d2 = r_ul * r_ul + r * r + 2.0 * r_ul * r * std::cos(phi);
        const double att = c * std::pow(d2, -0.5 * alpha_ul);
        return 1.0 / (1.0 + att);  // att may be inf at the contact point; 1/inf -> 0
    };
    const QuadResult q = integrate_gl_escalating(f, 0.0, M_PI, policy);
    if (!q.converged)
        throw NumericError("xi", "angular quadrature did not converge", q.value / M_PI,
                           q.error_estimate / M_PI);
    return q.value / M_PI;
}

QuadResult upsilon_tilde(double s, double rho_dl_w, double rho_ul_w, double r_ul,
                         double alpha1, double alpha_ul, const QuadraturePolicy& policy) {
    if (!(alpha1 > 2.0) || !(alpha_ul > 2.0))
        throw std::invalid_argument("upsilon_tilde: exponents must exceed 2");
    if (!(s >= 0.0)) throw std::invalid_argument("upsilon_tilde: s must be >= 0");
    if (s == 0.0 || (rho_dl_w == 0.0 && rho_ul_w == 0.0)) return QuadResult{0.0, 0.0, true};

    const double c_dl = s * rho_dl_w;
    auto integrand = [&](double r) {
        const double den = 1.0 + c_dl * std::pow(r, -alpha1);
        const double factor = std::isinf(den) ? 0.0 : xi(s, r, rho_ul_w, r_ul, alpha_ul, policy) / den;
        return (1.0 - factor) * r;
    };

    if (policy.radial_truncation > 0.0) {
        const double rstar = policy.radial_truncation;
        if (rstar <= r_ul)
            throw std::invalid_argument("upsilon_tilde: truncation radius must exceed r_ul");
        QuadResult q = integrate_adaptive(integrand, 0.0, rstar, policy);
        // Discarded mass is bounded by the sum of the two power-law tails.
        double tail = c_dl * std::pow(rstar, 2.0 - alpha1) / (alpha1 - 2.0);
        const double su = s * rho_ul_w;
        if (su > 0.0) {
            const double d = rstar - r_ul;
            tail += su * (std::pow(d, 2.0 - alpha_ul) / (alpha_ul - 2.0) +
                          r_ul * std::pow(d, 1.0 - alpha_ul) / (alpha_ul - 1.0));
        }
        q.error_estimate += tail;
        return q;
    }

    // Exact semi-infinite treatment: finite head plus transformed tail.
    const double scale_dl = c_dl > 0.0 ? std::pow(c_dl, 1.0 / alpha1) : 0.0;
    const double scale_ul = s * rho_ul_w > 0.0 ? std::pow(s * rho_ul_w, 1.0 / alpha_ul) : 0.0;
    const double r0 = 4.0 * (r_ul + scale_dl + scale_ul) + 10.0;

    const QuadResult head = integrate_adaptive(integrand, 0.0, r0, policy);
    const QuadResult tail = integrate_radial_tail(integrand, r0, policy);
    return QuadResult{head.value + tail.value, head.error_estimate + tail.error_estimate,
                      head.converged && tail.converged};
}

namespace {

// exp(-2 pi lambda [p_hit*upsilon_hat + (1-p_hit)*upsilon_tilde]) for one
// receiver's interferer field.
double field_laplace(const char* component, double s, const ScenarioConfig& cfg,
                     double p_hit, double alpha_ul, const QuadraturePolicy& policy) {
    if (!(s >= 0.0)) throw std::invalid_argument("laplace transform: s must be >= 0");
    if (s == 0.0) return 1.0;
    const LinkParams lp = derive_link_params(cfg);
    const double uh = upsilon_hat(s, lp.rho_dl_w, cfg.alpha1);
    const QuadResult ut = upsilon_tilde(s, lp.rho_dl_w, lp.rho_ul_w, cfg.r_ul,
                                        cfg.alpha1, alpha_ul, policy);
    if (!ut.converged)
        throw NumericError(component, "radial quadrature did not converge", ut.value,
                           ut.error_estimate);
    const double expo = 2.0 * M_PI * cfg.lambda_sbs *
                        (p_hit * uh + (1.0 - p_hit) * ut.value);
    return std::exp(-expo);
}

}  // namespace

double laplace_i_dx(double s, const ScenarioConfig& cfg, double p_hit,
                    const QuadraturePolicy& policy) {
    return field_laplace("laplace_i_dx", s, cfg, p_hit, cfg.alpha2, policy);
}

double laplace_i_x_miss(double s, const ScenarioConfig& cfg, double p_hit,
                        const QuadraturePolicy& policy) {
    if (!(s >= 0.0)) throw std::invalid_argument("laplace_i_x_miss: s must be >= 0");
    const LinkParams lp = derive_link_params(cfg);
    const SiGammaParams si = si_gamma_params(cfg.rician_k, lp.omega);
    const double si_factor = std::pow(1.0 + s * lp.rho_dl_w * si.scale_b, -si.shape_a);
    // At the SBS the interfering UL-node links are UL -> SBS, exponent alpha1.
    return si_factor * field_laplace("laplace_i_x_miss", s, cfg, p_hit, cfg.alpha1, policy);
}

double laplace_i_dx_miss(double s, const ScenarioConfig& cfg, double p_hit,
                         const QuadraturePolicy& policy) {
    const LinkParams lp = derive_link_params(cfg);
    const double ini = xi(s, cfg.r_dl, lp.rho_ul_w, cfg.r_ul, cfg.alpha2, policy);
    return ini * laplace_i_dx(s, cfg, p_hit, policy);
}

SuccessBound p_suc_lower_bound(const ScenarioConfig& cfg, double p_hit,
                               const QuadraturePolicy& policy) {
    const LinkParams lp = derive_link_params(cfg);
    if (!(lp.theta > 0.0)) throw std::invalid_argument("p_suc_lower_bound: theta must be > 0");
    SuccessBound b;
    b.s_ul = lp.theta * std::pow(cfg.r_ul, cfg.alpha1) / lp.rho_ul_w;
    b.s_dl = lp.theta * std::pow(cfg.r_dl, cfg.alpha1) / lp.rho_dl_w;
    b.l_dx = laplace_i_dx(b.s_dl, cfg, p_hit, policy);
    b.l_x_miss = laplace_i_x_miss(b.s_ul, cfg, p_hit, policy);
    b.l_dx_miss = laplace_i_dx_miss(b.s_dl, cfg, p_hit, policy);
    b.p_suc_lower = p_hit * b.l_dx + (1.0 - p_hit) * b.l_x_miss * b.l_dx_miss;
    return b;
}

double ase(double theta, double lambda, double p_suc) {
    return lambda * p_suc * std::log2(1.0 + theta);
}

double outage(double p_suc) {
    return 1.0 - p_suc;
}

double fd_throughput_gain(double theta, double lambda, double p_suc, double r_ul,
                          double r_dl, double alpha1) {
    if (!(theta > 0.0)) throw std::invalid_argument("fd_throughput_gain: theta must be > 0");
    if (!(alpha1 > 2.0)) throw std::invalid_argument("fd_throughput_gain: alpha1 must exceed 2");
    const double half_duplex_exponent =
        2.0 * M_PI * lambda * M_PI * std::pow(theta, 2.0 / alpha1) *
        (r_ul * r_ul + r_dl * r_dl) / std::sin(2.0 * M_PI / alpha1) / alpha1;
    return 2.0 * p_suc * std::exp(half_duplex_exponent);
}

AnalyticReport analytic_report(const ScenarioConfig& cfg, const QuadraturePolicy& policy) {
    const LinkParams lp = derive_link_params(cfg);
    const CatalogModel cat = zipf_catalog(cfg.catalog_size, cfg.zipf_gamma, cfg.eta_files);
    AnalyticReport rep;
    rep.p_hit = cache_hit_probability(cat, cfg.radius_request, cfg.radius_cache,
                                      cfg.storage_size);
    const SuccessBound b = p_suc_lower_bound(cfg, rep.p_hit, policy);
    rep.p_suc_lower = b.p_suc_lower;
    rep.outage = outage(b.p_suc_lower);
    rep.ase = ase(lp.theta, cfg.lambda_sbs, b.p_suc_lower);
    rep.tg_fd = fd_throughput_gain(lp.theta, cfg.lambda_sbs, b.p_suc_lower, cfg.r_ul,
                                   cfg.r_dl, cfg.alpha1);
    rep.l_dx = b.l_dx;
    rep.l_x_miss = b.l_x_miss;
    rep.l_dx_miss = b.l_dx_miss;
    rep.s_ul = b.s_ul;
    rep.s_dl = b.s_dl;
    return rep;
}

}  // namespace fdcache
