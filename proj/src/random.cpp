#include "fdcache/random.hpp"

#include <cmath>
#include <stdexcept>

namespace fdcache {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

std::mt19937_64 make_engine(std::uint64_t s) {
    // Expand through splitmix64 so that related seeds land in unrelated
    // regions of the mt19937_64 state space.
    std::uint64_t st = s;
    std::seed_seq seq{
        static_cast<std::uint32_t>(splitmix64(st)), static_cast<std::uint32_t>(splitmix64(st) >> 32),
        static_cast<std::uint32_t>(splitmix64(st)), static_cast<std::uint32_t>(splitmix64(st) >> 32),
        static_cast<std::uint32_t>(splitmix64(st)), static_cast<std::uint32_t>(splitmix64(st) >> 32),
        static_cast<std::uint32_t>(splitmix64(st)), static_cast<std::uint32_t>(splitmix64(st) >> 32)};
    return std::mt19937_64(seq);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed) : engine_(make_engine(seed)) {}

std::uint64_t RandomStream::raw() { return engine_(); }

double RandomStream::uniform01() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double RandomStream::uniform(double a, double b) {
    return a + (b - a) * uniform01();
}

bool RandomStream::bernoulli(double p) {
    return uniform01() < p;
}

double RandomStream::exponential() {
    // -log(1 - U), U in [0, 1): argument stays in (0, 1].
    return -std::log1p(-uniform01());
}

double RandomStream::normal() {
    for (;;) {
        const double u = 2.0 * uniform01() - 1.0;
        const double v = 2.0 * uniform01() - 1.0;
        const double s = u * u + v * v;
        if (s > 0.0 && s < 1.0) {
            return u * std::sqrt(-2.0 * std::log(s) / s);
        }
    }
}

double RandomStream::gamma(double shape, double scale) {
    if (!(shape > 0.0) || !(scale > 0.0))
        throw std::invalid_argument("gamma: shape and scale must be positive");
    if (shape < 1.0) {
        // Boost by one and correct with U^(1/shape).
        const double g = gamma(shape + 1.0, 1.0);
        const double u = uniform01();
        return scale * g * std::pow(u > 0.0 ? u : 0x1.0p-53, 1.0 / shape);
    }
    // Marsaglia-Tsang squeeze.
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
        double x, v;
        do {
            x = normal();
            v = 1.0 + c * x;
        } while (v <= 0.0);
        v = v * v * v;
        const double u = uniform01();
        if (u < 1.0 - 0.0331 * x * x * x * x) return scale * d * v;
        if (u > 0.0 && std::log(u) < 0.5 * x * x + d * (1.0 - v + std::log(v))) return scale * d * v;
    }
}

long RandomStream::poisson(double mean) {
    if (!(mean >= 0.0)) throw std::invalid_argument("poisson: mean must be >= 0");
    if (mean == 0.0) return 0;
    if (mean < 10.0) {
        // Knuth product method.
        const double limit = std::exp(-mean);
        long k = 0;
        double p = 1.0;
        do {
            ++k;
            p *= uniform01();
        } while (p > limit);
        return k - 1;
    }
    // PTRD, Hoermann's transformed rejection (exact for all means >= 10).
    const double slam = std::sqrt(mean);
    const double llam = std::log(mean);
    const double b = 0.931 + 2.53 * slam;
    const double a = -0.059 + 0.02483 * b;
    const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
    const double v_r = 0.9277 - 3.6224 / (b - 2.0);
    for (;;) {
        const double u = uniform01() - 0.5;
        const double v = uniform01();
        const double us = 0.5 - std::fabs(u);
        const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
        if (us >= 0.07 && v <= v_r) return static_cast<long>(kf);
        if (kf < 0.0 || (us < 0.013 && v > us)) continue;
        const double k = kf;
        if (std::log(v * inv_alpha / (a / (us * us) + b)) <=
            k * llam - mean - std::lgamma(k + 1.0)) {
            return static_cast<long>(kf);
        }
    }
}

RandomStream split_stream(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t st = seed;
    const std::uint64_t base = splitmix64(st);
    std::uint64_t st2 = base ^ (index * 0xD1342543DE82EF95ULL + 0x2545F4914F6CDD1DULL);
    return RandomStream(splitmix64(st2));
}

}  // namespace fdcache
