#include "pacsim/quadratures.hpp"

#include <algorithm>
#include <cmath>

namespace pacsim {

namespace {

void check_window(const QuadratureWindow& window) {
    if (!(window.duration > 0.0)) {
        throw ParameterError("quadratures: window duration must be > 0");
    }
}

// integral_{t0}^{t0+T} |xi(t' + tau)| dt' over the photon envelope.
double photon_window_integral(const PacStateSpec& spec, const QuadratureWindow& window) {
    return spec.photon_profile().envelope_integral(window.start + spec.tau,
                                                   window.end() + spec.tau);
}

}  // namespace

QuadratureWindow default_window(const PacStateSpec& spec) {
    const double wmin = std::min(spec.omega, spec.omega1);
    const double half = 10.0 / wmin + std::abs(spec.tau);
    return {-half, 2.0 * half};
}

double pac_quadrature_mean(const PacStateSpec& spec, const QuadratureWindow& window,
                           PhaseChoice phase) {
    check_window(window);
    const OverlapState ov = overlap_state(spec);
    const double i_xi = photon_window_integral(spec, window);
    const double i_al = spec.coherent_profile().envelope_integral(window.start, window.end());
    return std::cos(phase.offset) * (ov.norm * std::sqrt(ov.sigma_abs2) * i_xi + i_al);
}

QuadratureResult pac_quadrature_variance(const PacStateSpec& spec,
                                         const QuadratureWindow& window, PhaseChoice phase) {
    check_window(window);
    const OverlapState ov = overlap_state(spec);
    const double i_xi = photon_window_integral(spec, window);
    const double c = std::cos(phase.offset);
    const double s = std::sin(phase.offset);
    const double depth = ov.norm * (0.5 - ov.norm * ov.sigma_abs2) * c * c * i_xi * i_xi +
                         0.5 * ov.norm * s * s * i_xi * i_xi;
    QuadratureResult r;
    r.baseline = 0.25 * window.duration;
    r.variance = r.baseline + depth;
    r.squeezing_depth = depth;
    r.mean = pac_quadrature_mean(spec, window, phase);
    r.eta = 1.0;
    return r;
}

QuadratureResult fock_quadrature_variance(int n, const PulseProfile& profile,
                                          const QuadratureWindow& window) {
    if (n < 1) throw ParameterError("fock_quadrature_variance: n must be >= 1");
    check_window(window);
    const double i_xi = profile.envelope_integral(window.start, window.end());
    QuadratureResult r;
    r.baseline = 0.25 * window.duration;
    r.squeezing_depth = 0.5 * n * i_xi * i_xi;
    r.variance = r.baseline + r.squeezing_depth;
    r.mean = 0.0;
    r.eta = 1.0;
    return r;
}

QuadratureResult lossy_quadrature(const PacStateSpec& spec, const QuadratureWindow& window,
                                  const EtaResult& eta, PhaseChoice phase) {
    if (eta.magnitude < 0.0 || eta.magnitude > 1.0) {
        throw ParameterError("lossy_quadrature: |eta| must lie in [0, 1]");
    }
    // The window tracks the pulse: the lossless moments are evaluated on the
    // un-shifted window and the limits carry the retarded shift implicitly.
    QuadratureResult lossless = pac_quadrature_variance(spec, window, phase);
    QuadratureResult r;
    r.baseline = lossless.baseline;
    r.mean = std::sqrt(eta.magnitude) * lossless.mean;
    r.squeezing_depth = eta.magnitude * lossless.squeezing_depth;
    r.variance = r.baseline + r.squeezing_depth;
    r.eta = eta.magnitude;
    return r;
}

double optimal_nalpha_scan(double omega, double lo, double hi, double step) {
    if (!(omega > 0.0)) throw ParameterError("optimal_nalpha_scan: omega must be > 0");
    if (!(step > 0.0)) throw ParameterError("optimal_nalpha_scan: step must be > 0");
    if (lo > 0.5 + 1e-12 || hi < 10.0 - 1e-12) {
        throw ParameterError("optimal_nalpha_scan: grid must span at least [0.5, 10]");
    }
    double best_n = lo;
    double best_depth = std::numeric_limits<double>::infinity();
    const auto points = static_cast<long>(std::floor((hi - lo) / step + 0.5));
    for (long i = 0; i <= points; ++i) {
        const double n_alpha = lo + step * static_cast<double>(i);
        PacStateSpec spec{n_alpha, omega, omega, 0.0, 100.0 * omega};
        const QuadratureResult q = pac_quadrature_variance(spec, default_window(spec));
        if (q.squeezing_depth < best_depth) {
            best_depth = q.squeezing_depth;
            best_n = n_alpha;
        }
    }
    return best_n;
}

}  // namespace pacsim
