#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "pacsim/pulses.hpp"

using namespace pacsim;

namespace {
PacStateSpec spec(double n_alpha, double tau, double omega1, double omega0 = 100.0) {
    return {n_alpha, 1.0, omega1, tau, omega0};
}
}  // namespace

TEST_CASE("gaussian profile normalization") {
    const PulseProfile xi = make_gaussian_profile(1.0, 0.0, 1.0, 100.0);
    CHECK(xi.norm_squared() == doctest::Approx(1.0).epsilon(1e-14));
    // quadrature cross-check of the closed form
    const auto q = integrate([&](double t) { return std::norm(xi.amplitude(t)); }, -12.0, 12.0,
                             IntegrationConfig{10.0, 1e-12, 4000});
    CHECK(q.value == doctest::Approx(1.0).epsilon(1e-10));

    const PulseProfile alpha = make_gaussian_profile(1.0, 0.0, std::sqrt(3.0), 100.0);
    CHECK(alpha.norm_squared() == doctest::Approx(3.0).epsilon(1e-14));
}

TEST_CASE("envelope integral matches (2 pi)^(1/4)") {
    const PulseProfile xi = make_gaussian_profile(1.0, 0.0, 1.0, 100.0);
    CHECK(xi.envelope_integral() == doctest::Approx(1.5832334870861595).epsilon(1e-13));
    const double sq = xi.envelope_integral() * xi.envelope_integral();
    CHECK(sq == doctest::Approx(2.5066282746310002).epsilon(1e-13));
    // windowed version saturates to the full integral
    CHECK(xi.envelope_integral(-12.0, 12.0) ==
          doctest::Approx(xi.envelope_integral()).epsilon(1e-14));
}

TEST_CASE("invalid profile parameters") {
    CHECK_THROWS_AS(make_gaussian_profile(0.0, 0.0, 1.0, 100.0), ParameterError);
    CHECK_THROWS_AS(make_gaussian_profile(-1.0, 0.0, 1.0, 100.0), ParameterError);
    CHECK_THROWS_AS(make_gaussian_profile(1.0, 0.0, -0.5, 100.0), ParameterError);
}

TEST_CASE("overlap at perfect matching equals n_alpha") {
    const auto ov = overlap_state(spec(3.0, 0.0, 1.0));
    CHECK(ov.sigma_abs2 == doctest::Approx(3.0).epsilon(1e-14));
    CHECK(ov.norm == doctest::Approx(0.25).epsilon(1e-14));
}

TEST_CASE("overlap vanishes for huge offsets") {
    const auto ov = overlap_state(spec(3.0, 60.0, 1.0));
    CHECK(ov.sigma_abs2 < 1e-300);
    CHECK(ov.norm == doctest::Approx(1.0));
}

TEST_CASE("overlap at one pulse width of offset") {
    // |sigma|^2 = 3/e for tau = 1/Omega, Omega1 = Omega
    const auto ov = overlap_state(spec(3.0, 1.0, 1.0));
    CHECK(ov.sigma_abs2 == doctest::Approx(1.103638323514327).epsilon(1e-13));
    CHECK(ov.norm == doctest::Approx(0.475366886418671).epsilon(1e-13));
}

TEST_CASE("sigma carries the carrier phase exp(i w0 tau)") {
    const PacStateSpec s = spec(3.0, 1.0, 1.0, 50.0);
    const std::complex<double> sigma = overlap_sigma(s);
    const double expected = std::remainder(50.0 * 1.0, 2.0 * std::numbers::pi);
    CHECK(std::remainder(std::arg(sigma) - expected, 2.0 * std::numbers::pi) ==
          doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("normalization identity |N| (1 + |sigma|^2) = 1") {
    std::mt19937 rng(7);
    std::uniform_real_distribution<double> utau(0.0, 5.0), uw(0.2, 5.0), una(0.0, 8.0);
    for (int i = 0; i < 200; ++i) {
        const auto ov = overlap_state(spec(una(rng), utau(rng), uw(rng)));
        CHECK(ov.norm * (1.0 + ov.sigma_abs2) == doctest::Approx(1.0).epsilon(1e-15));
    }
}

TEST_CASE("overlap bounded by n_alpha, equality only at perfect matching") {
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> utau(0.0, 5.0), uw(0.2, 5.0);
    for (int i = 0; i < 300; ++i) {
        const double tau = utau(rng), w1 = uw(rng);
        const auto ov = overlap_state(spec(3.0, tau, w1));
        CHECK(ov.sigma_abs2 <= 3.0 + 1e-12);
        if (std::abs(tau) > 1e-3 || std::abs(w1 - 1.0) > 1e-3) {
            CHECK(ov.sigma_abs2 < 3.0);
        }
    }
}

TEST_CASE("closed form agrees with quadrature over the mismatch grid") {
    // 21 x 21 grid of (tau, omega1); closed |sigma|^2 vs direct quadrature
    for (int i = 0; i <= 20; ++i) {
        for (int j = 0; j <= 20; ++j) {
            const double tau = 5.0 * i / 20.0;
            const double w1 = 0.2 + (5.0 - 0.2) * j / 20.0;
            const PacStateSpec s = spec(3.0, tau, w1, 50.0);
            const double closed = std::norm(overlap_sigma(s));
            const double quad = std::norm(overlap_sigma_by_quadrature(
                s.photon_profile(), s.coherent_profile(), s.tau));
            if (closed > 1e-30) {
                CHECK(std::abs(closed - quad) / closed < 1e-8);
            } else {
                CHECK(quad < 1e-28);
            }
        }
    }
}

TEST_CASE("sigma is invariant under joint time translation") {
    const PulseProfile photon = make_gaussian_profile(2.0, 0.0, 1.0, 50.0);
    const PulseProfile coherent = make_gaussian_profile(1.0, 0.0, std::sqrt(3.0), 50.0);
    const PulseProfile photon_shift = make_gaussian_profile(2.0, 4.5, 1.0, 50.0);
    const PulseProfile coherent_shift = make_gaussian_profile(1.0, 4.5, std::sqrt(3.0), 50.0);
    const auto a = overlap_sigma(photon, coherent, 1.3);
    const auto b = overlap_sigma(photon_shift, coherent_shift, 1.3);
    CHECK(std::abs(a) == doctest::Approx(std::abs(b)).epsilon(1e-13));
}

TEST_CASE("mismatched central frequencies are rejected") {
    const PulseProfile photon = make_gaussian_profile(1.0, 0.0, 1.0, 50.0);
    const PulseProfile coherent = make_gaussian_profile(1.0, 0.0, 1.0, 60.0);
    CHECK_THROWS_AS(overlap_sigma(photon, coherent, 0.0), UnsupportedConfigError);
    CHECK_THROWS_AS(overlap_sigma_by_quadrature(photon, coherent, 0.0), UnsupportedConfigError);
}

TEST_CASE("sampled profile reproduces the gaussian overlap") {
    const double w0 = 50.0;
    const PulseProfile gauss = make_gaussian_profile(1.0, 0.0, 1.0, w0);
    const double dt = 0.004;
    const double t0 = -8.0;
    std::vector<std::complex<double>> samples;
    for (double t = t0; t <= 8.0 + 1e-12; t += dt) samples.push_back(gauss.amplitude(t));
    const PulseProfile sampled = PulseProfile::sampled(t0, dt, samples, w0);

    CHECK(sampled.norm_squared() == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(sampled.center_time() == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(sampled.bandwidth() == doctest::Approx(1.0).epsilon(1e-3));

    const PulseProfile coherent = make_gaussian_profile(1.0, 0.0, std::sqrt(3.0), w0);
    const double s2 = std::norm(overlap_sigma(sampled, coherent, 1.0));
    CHECK(s2 == doctest::Approx(1.103638323514327).epsilon(1e-4));
}

TEST_CASE("spec validation") {
    CHECK_THROWS_AS(overlap_state({3.0, 0.0, 1.0, 0.0, 100.0}), ParameterError);
    CHECK_THROWS_AS(overlap_state({3.0, 1.0, -1.0, 0.0, 100.0}), ParameterError);
    CHECK_THROWS_AS(overlap_state({-1.0, 1.0, 1.0, 0.0, 100.0}), ParameterError);
    CHECK(spec(3.0, 0.0, 1.0, 100.0).narrowband_valid());
    CHECK_FALSE(spec(3.0, 0.0, 1.0, 5.0).narrowband_valid());
}
