#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fdcache/quadrature.hpp"

using namespace fdcache;

TEST_CASE("gl_rule integrates polynomials of degree 2n-1 exactly") {
    // order 8 handles degree 15: int_0^1 x^15 dx = 1/16
    const double v = integrate_gl([](double x) { return std::pow(x, 15); }, 0.0, 1.0, 8);
    CHECK(v == doctest::Approx(1.0 / 16.0).epsilon(1e-13));
    const double w = integrate_gl([](double x) { return 3.0 * x * x; }, -1.0, 2.0, 4);
    CHECK(w == doctest::Approx(9.0).epsilon(1e-13));
}

TEST_CASE("gl escalation converges on smooth integrands and reports the error") {
    QuadraturePolicy policy;
    const QuadResult q =
        integrate_gl_escalating([](double x) { return std::cos(x); }, 0.0, M_PI / 2, policy);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(std::fabs(q.value - 1.0) <= q.error_estimate + 1e-12);
}

TEST_CASE("adaptive integration handles a sharp interior feature") {
    QuadraturePolicy policy;
    // int_0^1 1/sqrt(x + 1e-6) dx = 2(sqrt(1 + 1e-6) - 1e-3)
    const QuadResult q = integrate_adaptive(
        [](double x) { return 1.0 / std::sqrt(x + 1e-6); }, 0.0, 1.0, policy);
    CHECK(q.value == doctest::Approx(2.0 * (std::sqrt(1.000001) - 1e-3)).epsilon(1e-7));
}

TEST_CASE("radial tail transform evaluates power-law tails exactly") {
    QuadraturePolicy policy;
    // int_1^inf r^-2 dr = 1
    QuadResult q = integrate_radial_tail([](double r) { return 1.0 / (r * r); }, 1.0, policy);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-10));
    // int_2^inf r^-1.5 dr = 2 / sqrt(2)
    q = integrate_radial_tail([](double r) { return std::pow(r, -1.5); }, 2.0, policy);
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(2.0 / std::sqrt(2.0)).epsilon(1e-10));
}
