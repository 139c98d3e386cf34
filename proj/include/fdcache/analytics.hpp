#pragma once

#include "fdcache/caching_types.hpp"
#include "fdcache/channel.hpp"
#include "fdcache/quadrature.hpp"
#include "fdcache/scenario.hpp"

// Closed-form / quadrature evaluation of the interference Laplace
// transforms, the success-probability lower bound, outage, area spectral
// efficiency, and the full-duplex throughput gain.

namespace fdcache {

// pi * (s*rho)^(2/alpha) * csc(2*pi/alpha) / alpha: closed form of
// integral_0^inf (1 - 1/(1 + s*rho*r^-alpha)) r dr. Requires alpha > 2.
double upsilon_hat(double s, double rho_dl_w, double alpha1);

// Angular average (1/2pi) int_0^2pi dphi / (1 + s*rho_ul*(r_ul^2 + r^2 +
// 2*r_ul*r*cos phi)^(-alpha_ul/2)), evaluated on [0, pi] by symmetry with
// order-escalated Gauss-Legendre. Value in (0, 1].
double xi(double s, double r, double rho_ul_w, double r_ul, double alpha_ul,
          const QuadraturePolicy& policy = {});

// 1 - xi, computed directly as the average of att/(1 + att) so the radial
// integrand keeps full precision where xi rounds to one.
double xi_complement(double s, double r, double rho_ul_w, double r_ul, double alpha_ul,
                     const QuadraturePolicy& policy = {});

// Radial integral int_0^inf (1 - xi(s,r)/(1 + s*rho_dl*r^-alpha1)) r dr.
// alpha_ul selects the pathloss exponent of the UL-node links seen by the
// receiver under study. Always >= upsilon_hat(s). Non-convergence is
// reported in the result (converged = false, value = partial estimate).
QuadResult upsilon_tilde(double s, double rho_dl_w, double rho_ul_w, double r_ul,
                         double alpha1, double alpha_ul,
                         const QuadraturePolicy& policy = {});

// Laplace transform of the interference at the DL node without the own-cell
// term: hit-state SBSs contribute the closed-form exponent, miss-state SBSs
// the paired SBS + UL-node exponent (UL-node -> DL link, alpha2).
double laplace_i_dx(double s, const ScenarioConfig& cfg, double p_hit,
                    const QuadraturePolicy& policy = {});

// Transform of the interference at the (cache-miss) SBS: residual
// self-interference factor (1 + s*rho_dl*b)^-a times the field transform.
// UL-node links terminate at an SBS here, so the field kernel takes alpha1.
double laplace_i_x_miss(double s, const ScenarioConfig& cfg, double p_hit,
                        const QuadraturePolicy& policy = {});

// Transform at the (cache-miss) DL node: own-cell inter-node factor
// xi(s, r_dl) times laplace_i_dx.
double laplace_i_dx_miss(double s, const ScenarioConfig& cfg, double p_hit,
                         const QuadraturePolicy& policy = {});

// Lower bound on the success probability plus its component transforms,
// evaluated at the matched threshold arguments
//   s_ul = theta * r_ul^alpha1 / rho_ul,  s_dl = theta * r_dl^alpha1 / rho_dl.
struct SuccessBound {
    double s_ul = 0.0;
    double s_dl = 0.0;
    double l_dx = 0.0;       // at s_dl
    double l_x_miss = 0.0;   // at s_ul
    double l_dx_miss = 0.0;  // at s_dl
    double p_suc_lower = 0.0;
};
SuccessBound p_suc_lower_bound(const ScenarioConfig& cfg, double p_hit,
                               const QuadraturePolicy& policy = {});

double ase(double theta, double lambda, double p_suc);  // [bps/Hz/m^2]
double outage(double p_suc);

// 2 * p_suc * exp(2*pi*lambda * pi*theta^(2/alpha1) * (r_ul^2 + r_dl^2) *
// csc(2*pi/alpha1) / alpha1): throughput relative to the cache-free
// half-duplex baseline.
double fd_throughput_gain(double theta, double lambda, double p_suc, double r_ul,
                          double r_dl, double alpha1);

struct AnalyticReport {
    double p_hit = 0.0;
    double p_suc_lower = 0.0;
    double outage = 0.0;
    double ase = 0.0;
    double tg_fd = 0.0;
    double l_dx = 0.0;
    double l_x_miss = 0.0;
    double l_dx_miss = 0.0;
    double s_ul = 0.0;
    double s_dl = 0.0;
};

// Full pipeline for one scenario point. Throws NumericError (naming the
// failing transform) if a quadrature does not converge.
AnalyticReport analytic_report(const ScenarioConfig& cfg,
                               const QuadraturePolicy& policy = {});

}  // namespace fdcache
