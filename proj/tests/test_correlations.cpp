#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "pacsim/correlations.hpp"
#include "pacsim/integration.hpp"

using namespace pacsim;

namespace {
PacStateSpec spec(double n_alpha, double tau, double omega1) {
    return {n_alpha, 1.0, omega1, tau, 100.0};
}
const PacStateSpec perfect = spec(3.0, 0.0, 1.0);
}  // namespace

TEST_CASE("flux peak and integral at perfect overlap") {
    CHECK(pac_flux(perfect, 0.0) == doctest::Approx(3.7899516638136106).epsilon(1e-12));
    const auto r = integrate([&](double t) { return pac_flux(perfect, t); }, -12.0, 12.0);
    CHECK(r.value == doctest::Approx(4.75).epsilon(1e-9));
}

TEST_CASE("bare single photon flux integrates to one") {
    const PacStateSpec bare = spec(0.0, 0.7, 1.0);
    const auto r = integrate([&](double t) { return pac_flux(bare, t); }, -12.0, 12.0);
    CHECK(r.value == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("coincidences integrate to the closed-form count") {
    const PanelGrid grid = make_panel_grid({{0.0, 1.0}});
    double f2 = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        for (std::size_t j = 0; j < grid.size(); ++j) {
            f2 += grid.weights[i] * grid.weights[j] *
                  pac_coincidence(perfect, grid.nodes[i], grid.nodes[j]);
        }
    }
    CHECK(f2 == doctest::Approx(21.0).epsilon(1e-9));
}

TEST_CASE("coincidence symmetry and the single-photon zero") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> ut(-4.0, 4.0);
    const PacStateSpec mismatched = spec(3.0, 2.0, 3.0);
    for (int i = 0; i < 100; ++i) {
        const double a = ut(rng), b = ut(rng);
        CHECK(pac_coincidence(mismatched, a, b) ==
              doctest::Approx(pac_coincidence(mismatched, b, a)).epsilon(1e-13));
    }
    CHECK(pac_coincidence(spec(0.0, 0.0, 1.0), 0.3, -0.2) == 0.0);
}

TEST_CASE("g2[0] closed form") {
    CHECK(g2_zero(perfect) == doctest::Approx(336.0 / 361.0).epsilon(1e-14));
    CHECK(g2_zero(spec(3.0, 5.0, 5.0)) == doctest::Approx(0.9375).epsilon(1e-9));
    CHECK(g2_zero(spec(1e6, 0.0, 1.0)) == doctest::Approx(1.0).epsilon(1e-5));
    CHECK(g2_zero(spec(0.0, 0.0, 1.0)) == 0.0);
}

TEST_CASE("g2[0] stays below one across the mismatch plane") {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> utau(0.0, 5.0), uw(0.2, 5.0), una(0.05, 10.0);
    for (int i = 0; i < 400; ++i) {
        CHECK(g2_zero(spec(una(rng), utau(rng), uw(rng))) < 1.0);
    }
}

TEST_CASE("reference correlations") {
    CHECK(coherent_g2() == 1.0);
    CHECK(fock_g2(1) == 0.0);
    CHECK(fock_g2(4) == doctest::Approx(0.75));
    CHECK_THROWS_AS(fock_g2(0), ParameterError);
}

TEST_CASE("pointwise g2 equals the flux quotient away from the tails") {
    const PacStateSpec mismatched = spec(3.0, 3.0, 1.0);
    for (double t1 : {-1.0, 0.0, 0.5, 2.0}) {
        for (double t2 : {-2.0, 0.0, 1.5}) {
            const double direct = pac_coincidence(mismatched, t1, t2) /
                                  (pac_flux(mismatched, t1) * pac_flux(mismatched, t2));
            CHECK(pac_g2(mismatched, t1, t2) == doctest::Approx(direct).epsilon(1e-12));
        }
    }
}

TEST_CASE("g2 stays finite deep in the tails") {
    // the flux quotient underflows out here; the log-space ratio must not
    const double far = 40.0;
    const double v = pac_g2(perfect, far, far);
    CHECK(std::isfinite(v));
    // perfect overlap makes every term share one gaussian shape, so g2 is
    // constant over the whole plane
    CHECK(v == doctest::Approx(336.0 / 361.0).epsilon(1e-9));
}

TEST_CASE("g2 grid: symmetric, nonnegative, antibunched at the photon") {
    const PacStateSpec mismatched = spec(3.0, 3.0, 3.0);
    const CorrelationGrid grid = g2_grid(mismatched, {-5.0, 8.0, 41});
    const std::size_t n = grid.t1_axis.size();
    REQUIRE(n == 41);
    double diag_min = 2.0;
    for (std::size_t i = 0; i < n; ++i) {
        diag_min = std::min(diag_min, grid.at(i, i));
        CHECK(grid.flux[i] >= 0.0);
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(grid.at(i, j) >= 0.0);
            CHECK(grid.at(i, j) == doctest::Approx(grid.at(j, i)).epsilon(1e-12));
        }
    }
    // zero-delay dip where the photon sits (t = -tau)
    CHECK(diag_min < 1.0);
    CHECK(pac_g2(mismatched, -3.0, -3.0) < 1e-6);

    // with perfect overlap every term shares one gaussian, so the whole
    // plane sits at the measured value, below one
    const CorrelationGrid flat = g2_grid(perfect, {-5.0, 8.0, 21});
    for (double v : flat.values) CHECK(v == doctest::Approx(336.0 / 361.0).epsilon(1e-9));

    // bandwidth mismatch alone keeps the diagonal at or below one
    const CorrelationGrid bw = g2_grid(spec(3.0, 0.0, 3.0), {-5.0, 8.0, 41});
    for (std::size_t i = 0; i < 41; ++i) CHECK(bw.at(i, i) <= 1.0 + 1e-12);
    CHECK(pac_g2(spec(3.0, 0.0, 3.0), 0.0, 0.0) < 1.0);
}

TEST_CASE("loss only retards the grid") {
    const PacStateSpec mismatched = spec(3.0, 3.0, 1.0);
    const CorrelationGrid plain = g2_grid(mismatched, {-5.0, 8.0, 31});
    const EtaResult eta{0.5, 0.0, 2.5};
    const CorrelationGrid shifted = g2_grid(mismatched, {-5.0, 8.0, 31}, eta);
    REQUIRE(plain.values.size() == shifted.values.size());
    for (std::size_t i = 0; i < plain.values.size(); ++i) {
        CHECK(shifted.values[i] == plain.values[i]);
    }
    CHECK(shifted.t1_axis.front() == doctest::Approx(-2.5));
    CHECK(shifted.t1_axis.back() == doctest::Approx(10.5));
}

TEST_CASE("sampled profiles report missing values outside their support") {
    const double w0 = 50.0;
    const PulseProfile gauss = make_gaussian_profile(1.0, 0.0, 1.0, w0);
    std::vector<std::complex<double>> samples;
    const double dt = 0.02;
    for (double t = -4.0; t <= 4.0 + 1e-12; t += dt) samples.push_back(gauss.amplitude(t));
    const PulseProfile photon = PulseProfile::sampled(-4.0, dt, samples, w0);
    const PulseProfile coherent = make_gaussian_profile(1.0, 0.0, std::sqrt(3.0), w0);

    const CorrelationGrid grid = g2_grid(photon, coherent, 0.0, {-8.0, 8.0, 17});
    bool has_missing = false;
    bool has_value = false;
    for (double v : grid.values) {
        if (std::isnan(v)) {
            has_missing = true;
        } else {
            has_value = true;
        }
    }
    // the coherent pulse keeps the flux positive everywhere, so all points
    // are defined; truncate the coherent pulse too to force missing values
    CHECK(has_value);
    CHECK_FALSE(has_missing);

    const PulseProfile coherent_cut = PulseProfile::sampled(
        -4.0, dt,
        [&] {
            std::vector<std::complex<double>> v;
            for (double t = -4.0; t <= 4.0 + 1e-12; t += dt) {
                v.push_back(std::sqrt(3.0) * gauss.amplitude(t));
            }
            return v;
        }(),
        w0);
    const CorrelationGrid cut = g2_grid(photon, coherent_cut, 0.0, {-8.0, 8.0, 17});
    has_missing = false;
    for (double v : cut.values) has_missing = has_missing || std::isnan(v);
    CHECK(has_missing);
}

TEST_CASE("grid exports") {
    const CorrelationGrid grid = g2_grid(spec(3.0, 1.0, 1.0), {-2.0, 2.0, 5});
    write_grid_csv(grid, "test_grid.csv");
    write_grid_json(grid, "test_grid.json");

    std::ifstream csv("test_grid.csv");
    std::string first, second;
    std::getline(csv, first);
    std::getline(csv, second);
    CHECK(first.find("units") != std::string::npos);
    CHECK(second == "t1,t2,g2");

    std::ifstream jf("test_grid.json");
    nlohmann::json j = nlohmann::json::parse(jf);
    CHECK(j["t1_axis"].size() == 5);
    CHECK(j["values"].size() == 25);

    // byte stability
    write_grid_csv(grid, "test_grid_again.csv");
    std::ifstream a("test_grid.csv"), b("test_grid_again.csv");
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    CHECK(sa.str() == sb.str());

    std::remove("test_grid.csv");
    std::remove("test_grid.json");
    std::remove("test_grid_again.csv");
}
