#pragma once

#include <cstdint>
#include <random>

// Seeded random stream with the samplers the simulators need. All variate
// code is written out here (rather than using std::*_distribution) so a
// given (seed, call sequence) produces the same bits on every platform.

namespace fdcache {

class RandomStream {
public:
    explicit RandomStream(std::uint64_t seed);

    // Uniform on [0, 1), 53-bit resolution.
    double uniform01();
    // Uniform on [a, b).
    double uniform(double a, double b);
    bool bernoulli(double p);
    // Unit-mean exponential.
    double exponential();
    // Standard normal (polar method, no cached spare).
    double normal();
    // Gamma(shape k, scale s), Marsaglia-Tsang; any k > 0.
    double gamma(double shape, double scale);
    // Exact Poisson; product method below mean 10, PTRD above.
    long poisson(double mean);

    std::uint64_t raw();  // next engine word, for tests

private:
    std::mt19937_64 engine_;
};

// Independent, reproducible per-snapshot stream. Streams for distinct
// indices are statistically independent; same (seed, index) twice yields
// the identical sequence.
RandomStream split_stream(std::uint64_t seed, std::uint64_t index);

}  // namespace fdcache
