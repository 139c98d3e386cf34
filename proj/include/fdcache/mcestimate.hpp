#pragma once

#include <cstdint>
#include <vector>

namespace fdcache {

// Monte Carlo estimate with a 95% normal-approximation confidence interval.
struct McEstimate {
    double mean = 0.0;
    double ci_halfwidth = 0.0;
    long n = 0;
    std::uint64_t seed = 0;
};

// Compensated (Kahan) sum in index order; the result does not depend on how
// the values were produced across workers.
double kahan_sum(const std::vector<double>& values);

// Mean + 1.96 * s / sqrt(n) from per-sample values.
McEstimate make_estimate(const std::vector<double>& values, std::uint64_t seed);

}  // namespace fdcache
