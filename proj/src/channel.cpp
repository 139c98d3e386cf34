#include "fdcache/channel.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcache {

double link_exponent(LinkKind kind, double alpha1, double alpha2) {
    return kind == LinkKind::ul_to_dl ? alpha2 : alpha1;
}

double pathloss(double r, double alpha) {
    if (!(r > 0.0)) throw std::invalid_argument("pathloss: distance must be positive");
    return std::pow(r, -alpha);
}

double sample_rayleigh_power(RandomStream& rng) {
    return rng.exponential();
}

SiGammaParams si_gamma_params(double rician_k, double omega_linear) {
    if (!(rician_k >= 0.0)) throw std::invalid_argument("si_gamma_params: K must be >= 0");
    if (!(omega_linear >= 1.0)) throw std::invalid_argument("si_gamma_params: omega must be >= 1");
    const double a = (rician_k + 1.0) * (rician_k + 1.0) / (2.0 * rician_k + 1.0);
    return SiGammaParams{a, 1.0 / (a * omega_linear)};
}

double sample_si_power(const SiGammaParams& p, RandomStream& rng) {
    return rng.gamma(p.shape_a, p.scale_b);
}

}  // namespace fdcache
