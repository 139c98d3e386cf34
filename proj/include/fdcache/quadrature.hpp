#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

// Quadrature plumbing shared by the analytic transforms. The radial
// integrals run over [0, inf); by default the tail is folded onto (0, 1]
// with r = R0/t so there is no truncation error, only the quadrature's own
// error estimate.

namespace fdcache {

struct QuadraturePolicy {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    // 0 = exact semi-infinite treatment; > 0 truncates the radial domain at
    // this many meters and reports the analytic tail bound in the error.
    double radial_truncation = 0.0;
    int max_subdivisions = 15;
};

struct QuadResult {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = true;
};

// Numeric failure that still carries the partial estimate.
struct NumericError : std::runtime_error {
    NumericError(const std::string& component_, const std::string& what_,
                 double partial_, double error_estimate_)
        : std::runtime_error(component_ + ": " + what_),
          component(component_), partial(partial_), error_estimate(error_estimate_) {}
    std::string component;
    double partial;
    double error_estimate;
};

// Gauss-Legendre rule on [-1, 1]; nodes/weights computed once per order and
// cached.
struct GlRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GlRule& gl_rule(int order);

template <typename F>
double integrate_gl(F&& f, double a, double b, int order) {
    const GlRule& rule = gl_rule(order);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i)
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    return half * sum;
}

// Escalate the order (x2 each round) until two successive orders agree.
template <typename F>
QuadResult integrate_gl_escalating(F&& f, double a, double b, const QuadraturePolicy& policy,
                                   int start_order = 16, int max_order = 4096) {
    double prev = integrate_gl(f, a, b, start_order);
    for (int order = 2 * start_order; order <= max_order; order *= 2) {
        const double cur = integrate_gl(f, a, b, order);
        const double err = std::fabs(cur - prev);
        if (err <= policy.rel_tol * std::fabs(cur) + policy.abs_tol)
            return QuadResult{cur, err, true};
        prev = cur;
    }
    return QuadResult{prev, std::fabs(prev), false};
}

template <typename F>
QuadResult integrate_adaptive(F&& f, double a, double b, const QuadraturePolicy& policy) {
    double err = 0.0;
    const double v = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
        f, a, b, static_cast<unsigned>(policy.max_subdivisions), policy.rel_tol, &err);
    const bool ok = err <= 10.0 * (policy.rel_tol * std::fabs(v) + policy.abs_tol);
    return QuadResult{v, err, ok};
}

// Integral of f over [r0, inf) for integrands with algebraic decay faster
// than 1/r; mapped onto t in (0, 1] via r = r0 / t, with the Jacobian
// grouped as r^2 / r0 so nothing overflows near t = 0. Contributions below
// t = 1e-250 integrate to a vanishing mass for any decay power > 1 and are
// clipped.
template <typename F>
QuadResult integrate_radial_tail(F&& f, double r0, const QuadraturePolicy& policy) {
    boost::math::quadrature::tanh_sinh<double> ts(policy.max_subdivisions);
    double err = 0.0, l1 = 0.0;
    std::size_t levels = 0;
    auto transformed = [&](double t) {
        if (t < 1e-250) return 0.0;
        const double r = r0 / t;
        const double v = f(r);
        return v == 0.0 ? 0.0 : v * r * r / r0;
    };
    const double v = ts.integrate(transformed, 0.0, 1.0, std::sqrt(policy.rel_tol), &err,
                                  &l1, &levels);
    const bool ok = err <= 10.0 * (policy.rel_tol + policy.abs_tol / (std::fabs(v) + policy.abs_tol));
    return QuadResult{v, err * std::fabs(l1), ok};
}

}  // namespace fdcache
