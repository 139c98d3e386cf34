#pragma once

#include "fdcache/random.hpp"

// Pathloss with a link-type-dependent exponent, Rayleigh power fading, and
// the Gamma model of the residual self-interference channel.

namespace fdcache {

enum class LinkKind { ul_to_sbs, sbs_to_dl, sbs_to_sbs, ul_to_dl };

// UL node -> DL node propagates NLOS and takes alpha2; every other pair
// takes alpha1.
double link_exponent(LinkKind kind, double alpha1, double alpha2);

// r^-alpha. r must be strictly positive (coincident points have probability
// zero under the point process).
double pathloss(double r, double alpha);

// Unit-mean exponential power gain.
double sample_rayleigh_power(RandomStream& rng);

// Gamma(shape a, scale b) residual self-interference power gain with
// a*b = 1/omega: moments matched to a squared-Rician envelope with factor K
// and mean power 1/omega.
struct SiGammaParams {
    double shape_a = 0.0;
    double scale_b = 0.0;
};

// a = (K+1)^2 / (2K+1), b = 1 / (a * omega). Requires K >= 0, omega >= 1.
SiGammaParams si_gamma_params(double rician_k, double omega_linear);

double sample_si_power(const SiGammaParams& p, RandomStream& rng);

}  // namespace fdcache
