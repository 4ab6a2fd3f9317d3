#pragma once

#include <string>
#include <utility>
#include <vector>

#include "pacsim/pulses.hpp"

namespace pacsim {

/// Truncated photon-number distribution with its closed-form moments.
/// probabilities[n] = P_n; the vector is truncated once the cumulative mass
/// reaches 1 - 1e-12 (hard cap 256), with the remainder reported as
/// tail_bound.
struct PhotonDistribution {
    std::vector<double> probabilities;
    double tail_bound = 0.0;
    double mean = 0.0;
    double variance = 0.0;
    double eta = 1.0;
    std::string state_label;

    int n_max() const { return static_cast<int>(probabilities.size()) - 1; }
};

/// Mean and variance recomputed from a probability vector (for cross-checks
/// against the closed forms).
std::pair<double, double> moments_from_vector(const std::vector<double>& probabilities);

/// Lossless PAC photon-number probability. P_0 = 0 exactly (the added photon
/// guarantees at least one photon); for n >= 1
///   P_n = |N| n_a^(n-1)/(n-1)! e^(-n_a) (1 + (n-1)|sigma|^2/n_a).
double pac_pn(double n_alpha, double sigma_abs2, int n);
double pac_pn(const PacStateSpec& spec, int n);

/// PAC probability after loss |eta|. Boundary conventions: eta = 1 falls back
/// to the lossless form, eta = 0 gives delta_{n,0}.
double pac_pn_lossy(double n_alpha, double sigma_abs2, int n, double eta);
double pac_pn_lossy(const PacStateSpec& spec, int n, double eta);

/// Coherent-state probability with loss: Poisson(|eta| n_alpha).
double coherent_pn(double n_alpha, int n, double eta = 1.0);

/// m-photon Fock state through loss: binomial C(m,n) eta^n (1-eta)^(m-n).
/// Returns 0 for n > m.
double fock_pn(int m, int n, double eta = 1.0);

/// Random photon loss as binomial mixing of the distribution:
///   P_n(L) = eta^n sum_{m>=n} (1-eta)^(m-n) C(m,n) P_m.
PhotonDistribution bernoulli_transform(const PhotonDistribution& lossless, double eta);

/// Closed-form mean and variance of the lossy PAC distribution:
///   <n> = eta (1 + n_a + |sigma|^2 |N|)
///   (dn)^2 = <n> - (1 + |sigma|^4 |N|^2) eta^2.
std::pair<double, double> pac_mean_variance(double n_alpha, double sigma_abs2, double eta);
std::pair<double, double> pac_mean_variance(const PacStateSpec& spec, double eta);

/// Distribution builders (closed-form vectors plus closed-form moments).
PhotonDistribution pac_distribution(const PacStateSpec& spec, double eta = 1.0);
PhotonDistribution coherent_distribution(double n_alpha, double eta = 1.0);
PhotonDistribution fock_distribution(int m, double eta = 1.0);

}  // namespace pacsim
