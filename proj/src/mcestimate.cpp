#include "fdcache/mcestimate.hpp"

#include <cmath>

namespace fdcache {

double kahan_sum(const std::vector<double>& values) {
    double sum = 0.0, c = 0.0;
    for (double v : values) {
        const double y = v - c;
        const double t = sum + y;
        c = (t - sum) - y;
        sum = t;
    }
    return sum;
}

McEstimate make_estimate(const std::vector<double>& values, std::uint64_t seed) {
    McEstimate e;
    e.seed = seed;
    e.n = static_cast<long>(values.size());
    if (e.n == 0) return e;
    e.mean = kahan_sum(values) / static_cast<double>(e.n);
    if (e.n > 1) {
        double ss = 0.0, c = 0.0;
        for (double v : values) {
            const double d = (v - e.mean) * (v - e.mean);
            const double y = d - c;
            const double t = ss + y;
            c = (t - ss) - y;
            ss = t;
        }
        const double var = ss / static_cast<double>(e.n - 1);
        e.ci_halfwidth = 1.96 * std::sqrt(var / static_cast<double>(e.n));
    }
    return e;
}

}  // namespace fdcache
