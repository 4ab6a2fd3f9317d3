#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pacsim/propagation.hpp"
#include "pacsim/pulses.hpp"

namespace pacsim {

/// g2(t1, t2) sampled on a uniform grid, with the photon flux along t1.
/// values is row-major: values[i * t2_axis.size() + j] = g2(t1_axis[i],
/// t2_axis[j]). Missing points (zero flux on truncated sampled profiles) are
/// stored as NaN and exported as empty/null.
struct CorrelationGrid {
    std::vector<double> t1_axis;
    std::vector<double> t2_axis;
    std::vector<double> values;
    std::vector<double> flux;

    double at(std::size_t i, std::size_t j) const { return values[i * t2_axis.size() + j]; }
};

/// Photon flux f1(t) = |alpha|^2 + 2|N||sigma||xi(t+tau)||alpha(t)| +
/// |N||xi(t+tau)|^2.
double pac_flux(const PacStateSpec& spec, double t);

/// Two-time coincidence rate f2(t1, t2) (six-term expansion).
double pac_coincidence(const PacStateSpec& spec, double t1, double t2);

/// Pointwise g2(t1, t2) = f2 / (f1(t1) f1(t2)). Gaussian profiles evaluate
/// the ratio in log space, so far tails stay finite where the flux would
/// underflow.
double pac_g2(const PacStateSpec& spec, double t1, double t2);

struct GridBounds {
    double t_min = -5.0;
    double t_max = 8.0;
    int resolution = 201;
};

/// g2 over a square time grid. When a loss channel and length are given the
/// axes are retarded by L/v_g; the value matrix is unchanged (loss factors
/// cancel pointwise).
CorrelationGrid g2_grid(const PacStateSpec& spec, const GridBounds& bounds,
                        const std::optional<EtaResult>& eta = std::nullopt);

/// Grid for arbitrary (possibly sampled) profiles: plain quotient, with
/// points of identically zero flux reported as NaN.
CorrelationGrid g2_grid(const PulseProfile& photon, const PulseProfile& coherent, double tau,
                        const GridBounds& bounds);

/// Measured (time-integrated) correlation at zero delay,
/// g2[0] = 1 - (1 + |N|^2 |sigma|^4) / (1 + n_alpha + |N||sigma|^2)^2.
/// Loss-independent. Returns 0 for n_alpha = 0 (pure single photon).
double g2_zero(const PacStateSpec& spec);
double g2_zero(double n_alpha, double sigma_abs2);

/// Reference values: coherent pulses give 1 at all times, an n-photon pulse
/// gives the time-independent 1 - 1/n.
double coherent_g2();
double fock_g2(int n);

/// CSV export: header comment with units, then t1,t2,g2 triples.
std::string grid_to_csv(const CorrelationGrid& grid);
void write_grid_csv(const CorrelationGrid& grid, const std::string& path);
/// Compact JSON export: axes plus row-major values (NaN -> null).
std::string grid_to_json(const CorrelationGrid& grid);
void write_grid_json(const CorrelationGrid& grid, const std::string& path);

}  // namespace pacsim
