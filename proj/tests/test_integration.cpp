#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pacsim/integration.hpp"

using namespace pacsim;

namespace {
constexpr double sqrt_pi = 1.7724538509055160273;
}

TEST_CASE("gaussian integral over a wide window") {
    const auto r = integrate([](double t) { return std::exp(-t * t); }, -10.0, 10.0);
    CHECK(r.value == doctest::Approx(sqrt_pi).epsilon(1e-12));
    CHECK(r.error_bound < 1e-10 * sqrt_pi);
}

TEST_CASE("odd integrand over a symmetric window vanishes") {
    const auto r = integrate([](double t) { return t * std::exp(-t * t); }, -8.0, 8.0);
    CHECK(std::abs(r.value) < 1e-12);
}

TEST_CASE("normalized gaussian envelope integral squared") {
    // |xi(t)| = (2/pi)^(1/4) exp(-t^2) integrates to (2 pi)^(1/4)
    const auto r = integrate(
        [](double t) { return std::pow(2.0 / std::numbers::pi, 0.25) * std::exp(-t * t); },
        -10.0, 10.0);
    CHECK(r.value == doctest::Approx(1.5832334870861595).epsilon(1e-12));
    CHECK(r.value * r.value == doctest::Approx(2.5066282746310002).epsilon(1e-12));
}

TEST_CASE("complex integrand") {
    const auto r = integrate_complex(
        [](double t) {
            return std::exp(-t * t) * std::exp(std::complex<double>(0.0, t));
        },
        -10.0, 10.0);
    CHECK(r.value.real() == doctest::Approx(sqrt_pi * std::exp(-0.25)).epsilon(1e-12));
    CHECK(std::abs(r.value.imag()) < 1e-13);
}

TEST_CASE("reversed limits flip the sign") {
    const auto fwd = integrate([](double t) { return std::exp(-t * t); }, -5.0, 5.0);
    const auto rev = integrate([](double t) { return std::exp(-t * t); }, 5.0, -5.0);
    CHECK(fwd.value == doctest::Approx(-rev.value).epsilon(1e-14));
}

TEST_CASE("non-convergence raises with the best estimate attached") {
    IntegrationConfig config;
    config.max_subdivisions = 1;
    config.relative_tolerance = 1e-14;
    bool threw = false;
    try {
        integrate([](double t) { return std::exp(-t * t); }, -20.0, 20.0, config);
    } catch (const ConvergenceError& e) {
        threw = true;
        CHECK(e.best_estimate > 0.0);
        CHECK(e.error_bound > 0.0);
    }
    CHECK(threw);
}

TEST_CASE("determinism: identical inputs give identical bits") {
    auto f = [](double t) { return std::exp(-0.3 * t * t) * std::cos(t); };
    const auto a = integrate(f, -9.0, 9.0);
    const auto b = integrate(f, -9.0, 9.0);
    CHECK(a.value == b.value);
}

TEST_CASE("trapezoid on uniform samples") {
    std::vector<double> ramp(101);
    for (int i = 0; i <= 100; ++i) ramp[static_cast<std::size_t>(i)] = i / 100.0;
    CHECK(integrate_samples(ramp, 0.01) == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("panel grid resolves a narrow gaussian next to a wide one") {
    const PanelGrid grid = make_panel_grid({{0.0, 1.0}, {-3.0, 0.2}});
    const double v = integrate_on_grid(grid, [](double t) {
        const double u = (t + 3.0) / 0.2;
        return std::exp(-t * t) + std::exp(-u * u);
    });
    CHECK(v == doctest::Approx(sqrt_pi * (1.0 + 0.2)).epsilon(1e-12));
}

TEST_CASE("panel grid input checks") {
    CHECK_THROWS_AS(make_panel_grid({}), ParameterError);
    CHECK_THROWS_AS(make_panel_grid({{0.0, -1.0}}), ParameterError);
    CHECK_THROWS_AS(make_panel_grid({{0.0, 1.0}}, 12), ParameterError);
}
