#include <doctest.h>

#include <cmath>
#include <random>

#include "pacsim/photon_statistics.hpp"

using namespace pacsim;

namespace {
PacStateSpec spec(double n_alpha, double tau, double omega1) {
    return {n_alpha, 1.0, omega1, tau, 100.0};
}
const PacStateSpec perfect = spec(3.0, 0.0, 1.0);
}  // namespace

TEST_CASE("lossless PAC probabilities") {
    CHECK(pac_pn(perfect, 0) == 0.0);
    CHECK(pac_pn(perfect, 1) == doctest::Approx(0.012446767091965986).epsilon(1e-13));
    CHECK(pac_pn(perfect, 2) == doctest::Approx(0.07468060255179591).epsilon(1e-13));
    CHECK(pac_pn(perfect, 3) == doctest::Approx(0.16803135574154082).epsilon(1e-13));
    // offset by one pulse width: |sigma|^2 = 3/e
    CHECK(pac_pn(spec(3.0, 1.0, 1.0), 2) ==
          doctest::Approx(0.09712131571575391).epsilon(1e-12));
}

TEST_CASE("lossless PAC vector sums to one") {
    const PhotonDistribution d = pac_distribution(perfect);
    double sum = 0.0;
    for (double p : d.probabilities) sum += p;
    CHECK(sum + d.tail_bound == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.tail_bound < 1e-11);
    CHECK(d.probabilities[0] == 0.0);
}

TEST_CASE("closed-form moments match the summed vector") {
    for (double eta : {1.0, 0.75, 0.5, 0.25}) {
        const PhotonDistribution d = pac_distribution(perfect, eta);
        const auto [mean, variance] = moments_from_vector(d.probabilities);
        CHECK(d.mean == doctest::Approx(mean).epsilon(1e-10));
        CHECK(d.variance == doctest::Approx(variance).epsilon(1e-9));
    }
}

TEST_CASE("mean and variance at perfect overlap") {
    const auto [mean, variance] = pac_mean_variance(perfect, 1.0);
    CHECK(mean == doctest::Approx(4.75).epsilon(1e-14));
    // <n> - (1 + |sigma|^4 |N|^2) = 4.75 - 25/16
    CHECK(variance == doctest::Approx(3.1875).epsilon(1e-14));

    const auto [mean_l, variance_l] = pac_mean_variance(perfect, 0.5);
    CHECK(mean_l == doctest::Approx(2.375).epsilon(1e-14));
    CHECK(variance_l == doctest::Approx(1.984375).epsilon(1e-14));
}

TEST_CASE("variance-to-mean ratio reaches 3/4 at large offsets") {
    const auto [mean, variance] = pac_mean_variance(spec(3.0, 60.0, 1.0), 1.0);
    CHECK(variance / mean == doctest::Approx(0.75).epsilon(1e-12));
    // the distinguishable-photon plateau is already reached at tau = 5/Omega,
    // Omega1 = 5 Omega
    const auto [m2, v2] = pac_mean_variance(spec(3.0, 5.0, 5.0), 1.0);
    CHECK(v2 / m2 == doctest::Approx(0.75).epsilon(1e-9));
}

TEST_CASE("lossy probabilities against the boundary conventions") {
    const double s2 = 3.0;
    for (int n : {0, 1, 2, 5, 9}) {
        CHECK(pac_pn_lossy(3.0, s2, n, 1.0) == pac_pn(3.0, s2, n));
        CHECK(pac_pn_lossy(3.0, s2, n, 0.0) == (n == 0 ? 1.0 : 0.0));
        CHECK(pac_pn_lossy(3.0, s2, n, 1.0 - 1e-10) ==
              doctest::Approx(pac_pn(3.0, s2, n)).epsilon(1e-8));
    }
    CHECK_THROWS_AS(pac_pn_lossy(3.0, s2, 1, 1.5), ParameterError);
}

TEST_CASE("lossy closed form equals the Bernoulli transform") {
    const PhotonDistribution lossless = pac_distribution(perfect);
    const PhotonDistribution mixed = bernoulli_transform(lossless, 0.5);
    for (int n = 0; n <= 12; ++n) {
        CHECK(pac_pn_lossy(3.0, 3.0, n, 0.5) ==
              doctest::Approx(mixed.probabilities[static_cast<std::size_t>(n)])
                  .epsilon(1e-10));
    }
    CHECK(mixed.mean == doctest::Approx(2.375).epsilon(1e-10));
}

TEST_CASE("bernoulli transform near the identity limit") {
    const PhotonDistribution lossless = pac_distribution(perfect);
    const PhotonDistribution same = bernoulli_transform(lossless, 1.0 - 1e-9);
    for (int n = 0; n <= lossless.n_max() && n <= same.n_max(); ++n) {
        CHECK(same.probabilities[static_cast<std::size_t>(n)] ==
              doctest::Approx(lossless.probabilities[static_cast<std::size_t>(n)])
                  .epsilon(1e-7));
    }
}

TEST_CASE("bernoulli transform maps Poisson to Poisson") {
    const PhotonDistribution in = coherent_distribution(4.0, 1.0);
    const PhotonDistribution out = bernoulli_transform(in, 0.35);
    CHECK(out.n_max() >= 12);
    for (int n = 0; n <= out.n_max(); ++n) {
        CHECK(std::abs(out.probabilities[static_cast<std::size_t>(n)] -
                       coherent_pn(4.0, n, 0.35)) < 1e-10);
    }
    // everything past the truncation is inside the reported tail
    CHECK(coherent_pn(4.0, out.n_max() + 1, 0.35) < out.tail_bound + 1e-13);
}

TEST_CASE("coherent distribution") {
    CHECK(coherent_pn(4.0, 4, 1.0) == doctest::Approx(0.19536681481316456).epsilon(1e-13));
    CHECK(coherent_pn(0.0, 0, 1.0) == 1.0);
    CHECK(coherent_pn(0.0, 1, 1.0) == 0.0);
    const PhotonDistribution d = coherent_distribution(4.0, 0.5);
    CHECK(d.mean == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(d.variance == doctest::Approx(2.0).epsilon(1e-14));
    const auto [mean, variance] = moments_from_vector(d.probabilities);
    CHECK(mean == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(variance == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("fock distribution through loss") {
    CHECK(fock_pn(4, 2, 0.5) == doctest::Approx(0.375).epsilon(1e-14));
    CHECK(fock_pn(4, 4, 1.0) == 1.0);
    CHECK(fock_pn(4, 5, 0.5) == 0.0);
    const PhotonDistribution d = fock_distribution(4, 0.5);
    CHECK(d.variance / d.mean == doctest::Approx(0.5).epsilon(1e-14));
    const auto [mean, variance] = moments_from_vector(d.probabilities);
    CHECK(variance / mean == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("single photon limit n_alpha = 0") {
    CHECK(pac_pn(0.0, 0.0, 1) == 1.0);
    CHECK(pac_pn(0.0, 0.0, 2) == 0.0);
    CHECK(pac_pn_lossy(0.0, 0.0, 0, 0.3) == doctest::Approx(0.7).epsilon(1e-14));
    CHECK(pac_pn_lossy(0.0, 0.0, 1, 0.3) == doctest::Approx(0.3).epsilon(1e-14));
}

TEST_CASE("sub-poissonian everywhere") {
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> utau(0.0, 5.0), uw(0.2, 5.0), una(0.05, 8.0),
        ueta(1e-3, 1.0);
    for (int i = 0; i < 400; ++i) {
        const auto [mean, variance] =
            pac_mean_variance(spec(una(rng), utau(rng), uw(rng)), ueta(rng));
        CHECK(variance / mean < 1.0);
        CHECK(variance > 0.0);
    }
}

TEST_CASE("variance-to-mean ratio is affine in eta and grows with loss") {
    const OverlapState ov = overlap_state(spec(3.0, 0.7, 1.8));
    auto ratio = [&](double eta) {
        const auto [m, v] = pac_mean_variance(3.0, ov.sigma_abs2, eta);
        return v / m;
    };
    const double r1 = ratio(1.0), r2 = ratio(0.6), r3 = ratio(0.2);
    // collinear in eta
    const double slope_a = (r2 - r1) / (0.6 - 1.0);
    const double slope_b = (r3 - r2) / (0.2 - 0.6);
    CHECK(slope_a == doctest::Approx(slope_b).epsilon(1e-12));
    // ratio increases as loss increases
    CHECK(r3 > r2);
    CHECK(r2 > r1);
}

TEST_CASE("large-n truncation stays within the cap") {
    const PhotonDistribution d = pac_distribution(spec(50.0, 0.0, 1.0), 1.0);
    CHECK(d.n_max() <= 256);
    double sum = 0.0;
    for (double p : d.probabilities) sum += p;
    CHECK(sum + d.tail_bound >= 1.0 - 1e-12);
    CHECK(sum <= 1.0 + 1e-12);
    const auto [mean, variance] = moments_from_vector(d.probabilities);
    CHECK(mean == doctest::Approx(d.mean).epsilon(1e-8));
    CHECK(variance == doctest::Approx(d.variance).epsilon(1e-6));
}
