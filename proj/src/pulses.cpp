#include "pacsim/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace pacsim {

namespace {
constexpr double pi = std::numbers::pi;
}

PulseProfile PulseProfile::gaussian(double bandwidth, double center_time, double amplitude_scale,
                                    double omega0) {
    if (!(bandwidth > 0.0)) {
        throw ParameterError("PulseProfile::gaussian: bandwidth must be > 0");
    }
    if (amplitude_scale < 0.0) {
        throw ParameterError("PulseProfile::gaussian: amplitude_scale must be >= 0");
    }
    PulseProfile p;
    p.kind_ = PulseKind::Gaussian;
    p.bandwidth_ = bandwidth;
    p.center_time_ = center_time;
    p.amplitude_scale_ = amplitude_scale;
    p.omega0_ = omega0;
    return p;
}

PulseProfile PulseProfile::sampled(double start_time, double dt,
                                   std::vector<std::complex<double>> amplitudes, double omega0) {
    if (!(dt > 0.0)) throw ParameterError("PulseProfile::sampled: dt must be > 0");
    if (amplitudes.size() < 2) {
        throw ParameterError("PulseProfile::sampled: need at least two samples");
    }
    PulseProfile p;
    p.kind_ = PulseKind::Sampled;
    p.omega0_ = omega0;
    p.sample_start_ = start_time;
    p.sample_dt_ = dt;
    p.samples_ = std::move(amplitudes);

    // Metadata from the sampled envelope: center = first moment of |f|^2,
    // bandwidth from the rms width via W = 1/(2 sigma_t) (exact for the
    // Gaussian convention above).
    double m0 = 0.0, m1 = 0.0, m2 = 0.0;
    for (std::size_t i = 0; i < p.samples_.size(); ++i) {
        const double t = start_time + static_cast<double>(i) * dt;
        const double w = std::norm(p.samples_[i]);
        m0 += w;
        m1 += w * t;
        m2 += w * t * t;
    }
    if (m0 <= 0.0) throw ParameterError("PulseProfile::sampled: envelope is identically zero");
    p.center_time_ = m1 / m0;
    const double var = std::max(m2 / m0 - p.center_time_ * p.center_time_, 0.0);
    p.bandwidth_ = var > 0.0 ? 1.0 / (2.0 * std::sqrt(var)) : 1.0 / dt;
    p.amplitude_scale_ = std::sqrt(p.norm_squared());
    return p;
}

PulseProfile make_gaussian_profile(double bandwidth, double center_time, double amplitude_scale,
                                   double omega0) {
    return PulseProfile::gaussian(bandwidth, center_time, amplitude_scale, omega0);
}

double PulseProfile::envelope(double t) const {
    if (kind_ == PulseKind::Gaussian) {
        const double w = bandwidth_;
        const double u = t - center_time_;
        return amplitude_scale_ * std::pow(2.0 * w * w / pi, 0.25) * std::exp(-w * w * u * u);
    }
    return std::abs(amplitude(t));
}

std::complex<double> PulseProfile::amplitude(double t) const {
    if (kind_ == PulseKind::Gaussian) {
        return envelope(t) * std::exp(std::complex<double>(0.0, -omega0_ * t));
    }
    const double x = (t - sample_start_) / sample_dt_;
    if (x < 0.0 || x > static_cast<double>(samples_.size() - 1)) return {0.0, 0.0};
    const auto i = static_cast<std::size_t>(x);
    if (i + 1 >= samples_.size()) return samples_.back();
    const double frac = x - static_cast<double>(i);
    return samples_[i] * (1.0 - frac) + samples_[i + 1] * frac;
}

double PulseProfile::norm_squared() const {
    if (kind_ == PulseKind::Gaussian) return amplitude_scale_ * amplitude_scale_;
    std::vector<double> sq(samples_.size());
    std::transform(samples_.begin(), samples_.end(), sq.begin(),
                   [](const std::complex<double>& a) { return std::norm(a); });
    return integrate_samples(sq, sample_dt_);
}

double PulseProfile::envelope_integral() const {
    if (kind_ == PulseKind::Gaussian) {
        // integral of scale (2W^2/pi)^(1/4) exp(-W^2 u^2) = scale (2 pi)^(1/4) / sqrt(W)
        return amplitude_scale_ * std::pow(2.0 * pi, 0.25) / std::sqrt(bandwidth_);
    }
    std::vector<double> mag(samples_.size());
    std::transform(samples_.begin(), samples_.end(), mag.begin(),
                   [](const std::complex<double>& a) { return std::abs(a); });
    return integrate_samples(mag, sample_dt_);
}

double PulseProfile::envelope_integral(double a, double b) const {
    if (b < a) return -envelope_integral(b, a);
    if (kind_ == PulseKind::Gaussian) {
        const double w = bandwidth_;
        const double pref = amplitude_scale_ * std::pow(2.0 * w * w / pi, 0.25);
        const double scale = 0.5 * std::sqrt(pi) / w;
        return pref * scale * (std::erf(w * (b - center_time_)) - std::erf(w * (a - center_time_)));
    }
    // Trapezoid restricted to [a, b] on the native grid.
    const double lo = std::max(a, sample_start_);
    const double hi =
        std::min(b, sample_start_ + sample_dt_ * static_cast<double>(samples_.size() - 1));
    if (hi <= lo) return 0.0;
    const int n = std::max(2, static_cast<int>(std::ceil((hi - lo) / sample_dt_)) + 1);
    std::vector<double> mag(n);
    const double dt = (hi - lo) / (n - 1);
    for (int i = 0; i < n; ++i) mag[i] = std::abs(amplitude(lo + i * dt));
    return integrate_samples(mag, dt);
}

PulseProfile PacStateSpec::photon_profile() const {
    return PulseProfile::gaussian(omega1, 0.0, 1.0, omega0);
}

PulseProfile PacStateSpec::coherent_profile() const {
    return PulseProfile::gaussian(omega, 0.0, std::sqrt(n_alpha), omega0);
}

void PacStateSpec::validate() const {
    if (!(omega > 0.0)) throw ParameterError("PacStateSpec: omega must be > 0");
    if (!(omega1 > 0.0)) throw ParameterError("PacStateSpec: omega1 must be > 0");
    if (n_alpha < 0.0) throw ParameterError("PacStateSpec: n_alpha must be >= 0");
}

std::complex<double> overlap_sigma(const PulseProfile& photon, const PulseProfile& coherent,
                                   double tau) {
    if (photon.omega0() != coherent.omega0()) {
        throw UnsupportedConfigError(
            "overlap_sigma: profiles must share the central frequency omega0");
    }
    if (photon.is_gaussian() && coherent.is_gaussian()) {
        // Closed form for two Gaussians: the common carrier cancels up to the
        // constant phase exp(i w0 tau), and the envelope integral is itself
        // Gaussian in the center separation.
        const double w1 = photon.bandwidth();
        const double w2 = coherent.bandwidth();
        const double sum = w1 * w1 + w2 * w2;
        const double d = photon.center_time() - tau - coherent.center_time();
        const double mag = photon.amplitude_scale() * coherent.amplitude_scale() *
                           std::sqrt(2.0 * w1 * w2 / sum) *
                           std::exp(-w1 * w1 * w2 * w2 * d * d / sum);
        return std::polar(mag, photon.omega0() * tau);
    }
    // At least one sampled profile: trapezoid on the sampled grid(s).
    const PulseProfile& grid_src = photon.is_gaussian() ? coherent : photon;
    double start = grid_src.sample_start();
    double dt = grid_src.sample_dt();
    std::size_t n = grid_src.samples().size();
    if (!photon.is_gaussian() && !coherent.is_gaussian()) {
        // Use the finer of the two grids over the intersection of supports.
        dt = std::min(photon.sample_dt(), coherent.sample_dt());
        const double pstart = photon.sample_start() - tau;
        const double pend = pstart + photon.sample_dt() * (photon.samples().size() - 1);
        const double cend =
            coherent.sample_start() + coherent.sample_dt() * (coherent.samples().size() - 1);
        const double lo = std::max(pstart, coherent.sample_start());
        const double hi = std::min(pend, cend);
        if (hi <= lo) return {0.0, 0.0};
        start = lo;
        n = static_cast<std::size_t>(std::ceil((hi - lo) / dt)) + 1;
        dt = (hi - lo) / static_cast<double>(n - 1);
    }
    std::vector<std::complex<double>> vals(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = start + static_cast<double>(i) * dt;
        vals[i] = std::conj(photon.amplitude(t + tau)) * coherent.amplitude(t);
    }
    return integrate_samples(vals, dt);
}

std::complex<double> overlap_sigma(const PacStateSpec& spec) {
    return overlap_sigma(spec.photon_profile(), spec.coherent_profile(), spec.tau);
}

std::complex<double> overlap_sigma_by_quadrature(const PulseProfile& photon,
                                                 const PulseProfile& coherent, double tau,
                                                 const IntegrationConfig& config) {
    if (photon.omega0() != coherent.omega0()) {
        throw UnsupportedConfigError(
            "overlap_sigma_by_quadrature: profiles must share the central frequency omega0");
    }
    const double wmin = std::min(photon.bandwidth(), coherent.bandwidth());
    const double half = config.window_halfwidths / wmin;
    const double c1 = photon.center_time() - tau;
    const double c2 = coherent.center_time();
    const double a = std::min(c1, c2) - half;
    const double b = std::max(c1, c2) + half;
    auto integrand = [&](double t) {
        return std::conj(photon.amplitude(t + tau)) * coherent.amplitude(t);
    };
    return integrate_complex(integrand, a, b, config).value;
}

double normalization(std::complex<double> sigma) { return 1.0 / (1.0 + std::norm(sigma)); }

OverlapState overlap_state(const PacStateSpec& spec) {
    spec.validate();
    const std::complex<double> s = overlap_sigma(spec);
    return {std::norm(s), normalization(s)};
}

}  // namespace pacsim
