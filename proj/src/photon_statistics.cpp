#include "pacsim/photon_statistics.hpp"

#include <array>
#include <cmath>
#include <functional>

namespace pacsim {

namespace {

constexpr int kMaxN = 256;
constexpr double kMassTarget = 1.0 - 1e-12;

double log_factorial(int n) {
    static const auto small = [] {
        std::array<double, 21> t{};
        double f = 1.0;
        for (int i = 0; i <= 20; ++i) {
            t[static_cast<std::size_t>(i)] = std::log(f);
            f *= static_cast<double>(i + 1);
        }
        return t;
    }();
    if (n <= 20) return small[static_cast<std::size_t>(n)];
    return std::lgamma(static_cast<double>(n) + 1.0);
}

double log_binomial(int m, int n) {
    return log_factorial(m) - log_factorial(n) - log_factorial(m - n);
}

void check_eta(double eta, const char* where) {
    if (eta < 0.0 || eta > 1.0) {
        throw ParameterError(std::string(where) + ": eta must lie in [0, 1]");
    }
}

PhotonDistribution build(const std::string& label, double eta, double mean, double variance,
                         const std::function<double(int)>& pn) {
    PhotonDistribution dist;
    dist.state_label = label;
    dist.eta = eta;
    dist.mean = mean;
    dist.variance = variance;
    double cumulative = 0.0;
    for (int n = 0; n <= kMaxN; ++n) {
        const double p = pn(n);
        dist.probabilities.push_back(p);
        cumulative += p;
        if (cumulative >= kMassTarget) break;
    }
    dist.tail_bound = std::max(0.0, 1.0 - cumulative);
    return dist;
}

}  // namespace

std::pair<double, double> moments_from_vector(const std::vector<double>& probabilities) {
    double mean = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n) {
        mean += static_cast<double>(n) * probabilities[n];
    }
    double var = 0.0;
    for (std::size_t n = 0; n < probabilities.size(); ++n) {
        const double d = static_cast<double>(n) - mean;
        var += d * d * probabilities[n];
    }
    return {mean, var};
}

double pac_pn(double n_alpha, double sigma_abs2, int n) {
    if (n < 0) throw ParameterError("pac_pn: n must be >= 0");
    if (n == 0) return 0.0;
    const double norm = 1.0 / (1.0 + sigma_abs2);
    if (n_alpha == 0.0) return n == 1 ? norm : 0.0;
    const double mix = n == 1 ? 1.0 : 1.0 + (n - 1) * sigma_abs2 / n_alpha;
    const double lg =
        (n - 1) * std::log(n_alpha) - log_factorial(n - 1) - n_alpha;
    return norm * std::exp(lg) * mix;
}

double pac_pn(const PacStateSpec& spec, int n) {
    const OverlapState ov = overlap_state(spec);
    return pac_pn(spec.n_alpha, ov.sigma_abs2, n);
}

double pac_pn_lossy(double n_alpha, double sigma_abs2, int n, double eta) {
    if (n < 0) throw ParameterError("pac_pn_lossy: n must be >= 0");
    check_eta(eta, "pac_pn_lossy");
    if (eta == 1.0) return pac_pn(n_alpha, sigma_abs2, n);
    if (eta == 0.0) return n == 0 ? 1.0 : 0.0;

    const double q = 1.0 - eta;
    const double norm = 1.0 / (1.0 + sigma_abs2);
    const double s_over = n_alpha > 0.0 ? sigma_abs2 / n_alpha : 0.0;
    const double log_eta_part = n * std::log(eta) - eta * n_alpha;

    // Poisson-weighted branch where all n photons survive plus one extra lost.
    double first = 0.0;
    if (n == 0 || n_alpha > 0.0) {
        const double lg = n == 0 ? 0.0 : n * std::log(n_alpha) - log_factorial(n);
        first = q * std::exp(log_eta_part + lg) * (1.0 + 2.0 * n * s_over + q * sigma_abs2);
    }
    // Branch matching the lossless form at the surviving photon number.
    double second = 0.0;
    if (n >= 1 && (n == 1 || n_alpha > 0.0)) {
        const double lg = n == 1 ? 0.0 : (n - 1) * std::log(n_alpha) - log_factorial(n - 1);
        second = std::exp(log_eta_part + lg) * (1.0 + (n - 1) * s_over);
    }
    return norm * (first + second);
}

double pac_pn_lossy(const PacStateSpec& spec, int n, double eta) {
    const OverlapState ov = overlap_state(spec);
    return pac_pn_lossy(spec.n_alpha, ov.sigma_abs2, n, eta);
}

double coherent_pn(double n_alpha, int n, double eta) {
    if (n < 0) throw ParameterError("coherent_pn: n must be >= 0");
    if (n_alpha < 0.0) throw ParameterError("coherent_pn: n_alpha must be >= 0");
    check_eta(eta, "coherent_pn");
    const double lambda = eta * n_alpha;
    if (lambda == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(n * std::log(lambda) - lambda - log_factorial(n));
}

double fock_pn(int m, int n, double eta) {
    if (m < 0 || n < 0) throw ParameterError("fock_pn: m and n must be >= 0");
    check_eta(eta, "fock_pn");
    if (n > m) return 0.0;
    if (eta == 1.0) return n == m ? 1.0 : 0.0;
    if (eta == 0.0) return n == 0 ? 1.0 : 0.0;
    return std::exp(log_binomial(m, n) + n * std::log(eta) + (m - n) * std::log(1.0 - eta));
}

PhotonDistribution bernoulli_transform(const PhotonDistribution& lossless, double eta) {
    check_eta(eta, "bernoulli_transform");
    PhotonDistribution out;
    out.state_label = lossless.state_label;
    out.eta = eta;
    if (eta == 1.0) {
        out = lossless;
        return out;
    }
    if (eta == 0.0) {
        out.probabilities = {1.0};
        out.tail_bound = 0.0;
        out.mean = 0.0;
        out.variance = 0.0;
        return out;
    }
    const int m_max = lossless.n_max();
    const double log_eta = std::log(eta);
    const double log_q = std::log(1.0 - eta);
    double cumulative = 0.0;
    for (int n = 0; n <= m_max; ++n) {
        double p = 0.0;
        for (int m = n; m <= m_max; ++m) {
            const double pm = lossless.probabilities[static_cast<std::size_t>(m)];
            if (pm <= 0.0) continue;
            p += std::exp(n * log_eta + (m - n) * log_q + log_binomial(m, n) + std::log(pm));
        }
        out.probabilities.push_back(p);
        cumulative += p;
        if (1.0 - cumulative - lossless.tail_bound < 1e-14) break;
    }
    out.tail_bound = std::max(0.0, 1.0 - cumulative);
    const auto [mean, variance] = moments_from_vector(out.probabilities);
    out.mean = mean;
    out.variance = variance;
    return out;
}

std::pair<double, double> pac_mean_variance(double n_alpha, double sigma_abs2, double eta) {
    check_eta(eta, "pac_mean_variance");
    const double norm = 1.0 / (1.0 + sigma_abs2);
    const double mean = eta * (1.0 + n_alpha + sigma_abs2 * norm);
    const double sn = sigma_abs2 * norm;
    const double variance = mean - (1.0 + sn * sn) * eta * eta;
    return {mean, variance};
}

std::pair<double, double> pac_mean_variance(const PacStateSpec& spec, double eta) {
    const OverlapState ov = overlap_state(spec);
    return pac_mean_variance(spec.n_alpha, ov.sigma_abs2, eta);
}

PhotonDistribution pac_distribution(const PacStateSpec& spec, double eta) {
    const OverlapState ov = overlap_state(spec);
    const auto [mean, variance] = pac_mean_variance(spec.n_alpha, ov.sigma_abs2, eta);
    return build("pac", eta, mean, variance, [&](int n) {
        return pac_pn_lossy(spec.n_alpha, ov.sigma_abs2, n, eta);
    });
}

PhotonDistribution coherent_distribution(double n_alpha, double eta) {
    const double lambda = eta * n_alpha;
    return build("coherent", eta, lambda, lambda,
                 [&](int n) { return coherent_pn(n_alpha, n, eta); });
}

PhotonDistribution fock_distribution(int m, double eta) {
    const double mean = m * eta;
    const double variance = m * eta * (1.0 - eta);
    return build("fock", eta, mean, variance, [&](int n) { return fock_pn(m, n, eta); });
}

}  // namespace pacsim
