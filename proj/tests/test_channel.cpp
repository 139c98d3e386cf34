#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "fdcache/channel.hpp"
#include "fdcache/units.hpp"

using namespace fdcache;

TEST_CASE("link_exponent: only the UL-to-DL pair takes alpha2") {
    CHECK(link_exponent(LinkKind::ul_to_dl, 3.0, 4.0) == 4.0);
    CHECK(link_exponent(LinkKind::ul_to_sbs, 3.0, 4.0) == 3.0);
    CHECK(link_exponent(LinkKind::sbs_to_dl, 3.0, 4.0) == 3.0);
    CHECK(link_exponent(LinkKind::sbs_to_sbs, 3.0, 4.0) == 3.0);
}

TEST_CASE("link_exponent is total over the interference-relevant pairs") {
    for (const LinkKind k : {LinkKind::ul_to_sbs, LinkKind::sbs_to_dl, LinkKind::sbs_to_sbs,
                             LinkKind::ul_to_dl}) {
        const double a = link_exponent(k, 3.0, 4.0);
        CHECK((a == 3.0 || a == 4.0));
    }
}

TEST_CASE("pathloss: unit distance, powers of two, monotonicity, singularity") {
    CHECK(pathloss(1.0, 3.7) == doctest::Approx(1.0));
    CHECK(pathloss(2.0, 3.0) == doctest::Approx(0.125));
    RandomStream rng(31);
    for (int i = 0; i < 500; ++i) {
        const double r1 = rng.uniform(0.01, 100.0);
        const double r2 = r1 + rng.uniform(0.01, 100.0);
        CHECK(pathloss(r1, 3.0) > pathloss(r2, 3.0));
    }
    CHECK_THROWS_AS(pathloss(0.0, 3.0), std::invalid_argument);
}

TEST_CASE("rayleigh power fading is the unit exponential") {
    RandomStream rng(32);
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double h = sample_rayleigh_power(rng);
        CHECK(h >= 0.0);
        sum += h;
    }
    CHECK(sum / n == doctest::Approx(1.0).epsilon(3.0 / std::sqrt(static_cast<double>(n))));
}

TEST_CASE("si_gamma_params: Rayleigh limit and mean constraint") {
    const SiGammaParams p0 = si_gamma_params(0.0, 1.0);
    CHECK(p0.shape_a == doctest::Approx(1.0));
    CHECK(p0.scale_b == doctest::Approx(1.0));

    const SiGammaParams p1 = si_gamma_params(1.0, 1e6);
    CHECK(p1.shape_a == doctest::Approx(4.0 / 3.0).epsilon(1e-14));
    CHECK(p1.scale_b == doctest::Approx(7.5e-7).epsilon(1e-14));

    RandomStream rng(33);
    for (int i = 0; i < 200; ++i) {
        const double k = rng.uniform(0.0, 12.0);
        const double omega = db_to_linear(rng.uniform(0.0, 90.0));
        const SiGammaParams p = si_gamma_params(k, omega);
        CHECK(p.shape_a * p.scale_b * omega == doctest::Approx(1.0).epsilon(1e-12));
        CHECK(p.shape_a > 0.0);
        CHECK(p.scale_b > 0.0);
    }
}

TEST_CASE("si_gamma_params matches moments of a squared-Rician envelope") {
    // Independent oracle: |LOS + scattered|^2 with K-factor 1, scaled to
    // mean 1e-6, must match the Gamma(4/3, 7.5e-7) mean and variance.
    const double k = 1.0, omega = 1e6;
    const SiGammaParams p = si_gamma_params(k, omega);
    RandomStream rng(34);
    const int n = 2000000;
    const double nu = std::sqrt(k / (k + 1.0));        // LOS amplitude
    const double sigma = std::sqrt(0.5 / (k + 1.0));   // scattered std per axis
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double re = nu + sigma * rng.normal();
        const double im = sigma * rng.normal();
        const double x = (re * re + im * im) / omega;
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    CHECK(mean == doctest::Approx(p.shape_a * p.scale_b).epsilon(0.01));
    CHECK(var == doctest::Approx(p.shape_a * p.scale_b * p.scale_b).epsilon(0.01));
}

TEST_CASE("sample_si_power: Gamma moments") {
    const SiGammaParams p = si_gamma_params(1.0, 1e6);
    RandomStream rng(35);
    const int n = 1000000;
    double sum = 0.0, sumsq = 0.0;
    for (int i = 0; i < n; ++i) {
        const double x = sample_si_power(p, rng);
        CHECK(x >= 0.0);
        sum += x;
        sumsq += x * x;
    }
    const double mean = sum / n;
    const double var = sumsq / n - mean * mean;
    const double m_true = p.shape_a * p.scale_b;
    const double v_true = p.shape_a * p.scale_b * p.scale_b;
    CHECK(mean == doctest::Approx(m_true).epsilon(3.0 * std::sqrt(p.shape_a / n) / p.shape_a));
    CHECK(var == doctest::Approx(v_true).epsilon(3.0 * std::sqrt((6.0 / p.shape_a + 2.0) / n)));
}

TEST_CASE("self-interference Laplace transform matches (1 + s b)^-a over six decades") {
    const SiGammaParams p = si_gamma_params(1.0, 1e6);
    RandomStream rng(36);
    const int n = 1000000;
    std::vector<double> svals;
    for (int d = -3; d <= 3; ++d) svals.push_back(std::pow(10.0, d) / p.scale_b);
    std::vector<double> acc(svals.size(), 0.0);
    for (int i = 0; i < n; ++i) {
        const double x = sample_si_power(p, rng);
        for (std::size_t j = 0; j < svals.size(); ++j) acc[j] += std::exp(-svals[j] * x);
    }
    for (std::size_t j = 0; j < svals.size(); ++j) {
        const double analytic = std::pow(1.0 + svals[j] * p.scale_b, -p.shape_a);
        CHECK(acc[j] / n == doctest::Approx(analytic).epsilon(0.005));
    }
}
