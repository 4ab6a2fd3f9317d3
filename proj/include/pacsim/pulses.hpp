#pragma once

#include <complex>
#include <vector>

#include "pacsim/integration.hpp"

namespace pacsim {

enum class PulseKind { Gaussian, Sampled };

/// Complex temporal amplitude of a wavepacket. Gaussian profiles use the
/// amplitude-envelope convention
///
///     f(t) = scale * (2 W^2 / pi)^(1/4) * exp(-W^2 (t - t0)^2) * exp(-i w0 t),
///
/// so that integral |f|^2 dt = scale^2 (scale 1 for a single photon,
/// sqrt(n_alpha) for a coherent pulse). Sampled profiles carry amplitudes on
/// a uniform time grid and integrate by the trapezoidal rule.
class PulseProfile {
public:
    static PulseProfile gaussian(double bandwidth, double center_time, double amplitude_scale,
                                 double omega0);
    static PulseProfile sampled(double start_time, double dt,
                                std::vector<std::complex<double>> amplitudes, double omega0);

    PulseKind kind() const { return kind_; }
    bool is_gaussian() const { return kind_ == PulseKind::Gaussian; }

    double bandwidth() const { return bandwidth_; }
    double center_time() const { return center_time_; }
    double amplitude_scale() const { return amplitude_scale_; }
    double omega0() const { return omega0_; }
    /// Nominal pulse width 1/bandwidth.
    double width() const { return 1.0 / bandwidth_; }

    /// |f(t)|. Linear interpolation between samples, zero outside the grid.
    double envelope(double t) const;
    /// f(t) including the carrier phase exp(-i w0 t).
    std::complex<double> amplitude(double t) const;

    /// integral |f(t)|^2 dt (closed form for Gaussian, trapezoid for samples).
    double norm_squared() const;
    /// integral |f(t)| dt over the whole pulse.
    double envelope_integral() const;
    /// integral_a^b |f(t)| dt (erf closed form for Gaussian).
    double envelope_integral(double a, double b) const;

    double sample_start() const { return sample_start_; }
    double sample_dt() const { return sample_dt_; }
    const std::vector<std::complex<double>>& samples() const { return samples_; }

private:
    PulseProfile() = default;

    PulseKind kind_ = PulseKind::Gaussian;
    double bandwidth_ = 1.0;
    double center_time_ = 0.0;
    double amplitude_scale_ = 1.0;
    double omega0_ = 0.0;
    double sample_start_ = 0.0;
    double sample_dt_ = 0.0;
    std::vector<std::complex<double>> samples_;
};

/// Convenience free function mirroring PulseProfile::gaussian.
PulseProfile make_gaussian_profile(double bandwidth, double center_time, double amplitude_scale,
                                   double omega0);

/// Full parameterization of a PAC state: coherent pulse (n_alpha, omega) at
/// t = 0 plus a single photon (omega1) offset by tau. Times are in units of
/// 1/omega, bandwidths in units of omega.
struct PacStateSpec {
    double n_alpha = 3.0;
    double omega = 1.0;
    double omega1 = 1.0;
    double tau = 0.0;
    double omega0 = 100.0;

    PulseProfile photon_profile() const;
    PulseProfile coherent_profile() const;

    /// Narrowband approximation needs omega0 >= 10 omega. Advisory only.
    bool narrowband_valid() const { return omega0 >= 10.0 * omega; }
    /// Throws ParameterError on invalid bandwidths or negative n_alpha.
    void validate() const;
};

/// Cross-correlation sigma(tau) = integral xi*(t + tau) alpha(t) dt.
/// Gaussian pairs take the closed-form fast path; anything sampled goes
/// through trapezoidal integration on the native grid.
/// Throws UnsupportedConfigError when the central frequencies differ.
std::complex<double> overlap_sigma(const PulseProfile& photon, const PulseProfile& coherent,
                                   double tau);
std::complex<double> overlap_sigma(const PacStateSpec& spec);

/// Same integral evaluated by adaptive quadrature regardless of profile kind
/// (used to cross-check the closed form).
std::complex<double> overlap_sigma_by_quadrature(const PulseProfile& photon,
                                                 const PulseProfile& coherent, double tau,
                                                 const IntegrationConfig& config = {});

/// |N(tau)| = 1 / (1 + |sigma|^2).
double normalization(std::complex<double> sigma);

/// The (|sigma|^2, |N|) pair every closed form is built from.
struct OverlapState {
    double sigma_abs2 = 0.0;
    double norm = 1.0;
};

OverlapState overlap_state(const PacStateSpec& spec);

}  // namespace pacsim
