#include "pacsim/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "pacsim/io.hpp"

namespace pacsim {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double lse(const std::vector<double>& logs) {
    double m = -std::numeric_limits<double>::infinity();
    for (double v : logs) m = std::max(m, v);
    if (!std::isfinite(m)) return m;
    double s = 0.0;
    for (double v : logs) s += std::exp(v - m);
    return m + std::log(s);
}

// Log-envelope pieces of a Gaussian PAC spec (photon shifted by tau).
struct LogEnvelopes {
    double lpref_xi, w1sq, tau;
    double lpref_al, wsq;     // -inf prefactor when n_alpha = 0
    double lsig, lnorm;       // log |sigma| (may be -inf), log |N|

    double lxi(double t) const {
        const double u = t + tau;
        return lpref_xi - w1sq * u * u;
    }
    double lal(double t) const { return lpref_al - wsq * t * t; }
};

LogEnvelopes log_envelopes(const PacStateSpec& spec) {
    const OverlapState ov = overlap_state(spec);
    LogEnvelopes e{};
    e.w1sq = spec.omega1 * spec.omega1;
    e.wsq = spec.omega * spec.omega;
    e.tau = spec.tau;
    e.lpref_xi = 0.25 * std::log(2.0 * e.w1sq / std::numbers::pi);
    e.lpref_al = spec.n_alpha > 0.0
                     ? 0.5 * std::log(spec.n_alpha) + 0.25 * std::log(2.0 * e.wsq / std::numbers::pi)
                     : -std::numeric_limits<double>::infinity();
    e.lsig = ov.sigma_abs2 > 0.0 ? 0.5 * std::log(ov.sigma_abs2)
                                 : -std::numeric_limits<double>::infinity();
    e.lnorm = std::log(ov.norm);
    return e;
}

double log_flux(const LogEnvelopes& e, double t) {
    const double lx = e.lxi(t);
    const double la = e.lal(t);
    return lse({2.0 * la, std::numbers::ln2 + e.lnorm + e.lsig + lx + la, e.lnorm + 2.0 * lx});
}

double log_coincidence(const LogEnvelopes& e, double t1, double t2) {
    const double lx1 = e.lxi(t1), lx2 = e.lxi(t2);
    const double la1 = e.lal(t1), la2 = e.lal(t2);
    const double ln2 = std::numbers::ln2;
    return lse({e.lnorm + 2.0 * lx1 + 2.0 * la2,
                e.lnorm + 2.0 * lx2 + 2.0 * la1,
                2.0 * la1 + 2.0 * la2,
                e.lnorm + ln2 + lx1 + lx2 + la1 + la2,
                e.lnorm + ln2 + e.lsig + lx1 + la1 + 2.0 * la2,
                e.lnorm + ln2 + e.lsig + lx2 + la2 + 2.0 * la1});
}

// Direct (linear-space) flux/coincidence for arbitrary profiles.
double flux_profiles(const PulseProfile& photon, const PulseProfile& coherent, double tau,
                     double sigma_abs, double norm, double t) {
    const double x = photon.envelope(t + tau);
    const double a = coherent.envelope(t);
    return a * a + 2.0 * norm * sigma_abs * x * a + norm * x * x;
}

double coincidence_profiles(const PulseProfile& photon, const PulseProfile& coherent, double tau,
                            double sigma_abs, double norm, double t1, double t2) {
    const double x1 = photon.envelope(t1 + tau);
    const double x2 = photon.envelope(t2 + tau);
    const double a1 = coherent.envelope(t1);
    const double a2 = coherent.envelope(t2);
    return norm * (x1 * x1 * a2 * a2 + x2 * x2 * a1 * a1 + a1 * a1 * a2 * a2 / norm +
                   2.0 * x1 * x2 * a1 * a2 + 2.0 * sigma_abs * x1 * a1 * a2 * a2 +
                   2.0 * sigma_abs * x2 * a2 * a1 * a1);
}

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = lo + (hi - lo) * static_cast<double>(i) / (n - 1);
    }
    return v;
}

}  // namespace

double pac_flux(const PacStateSpec& spec, double t) {
    const OverlapState ov = overlap_state(spec);
    return flux_profiles(spec.photon_profile(), spec.coherent_profile(), spec.tau,
                         std::sqrt(ov.sigma_abs2), ov.norm, t);
}

double pac_coincidence(const PacStateSpec& spec, double t1, double t2) {
    if (spec.n_alpha == 0.0) return 0.0;
    const OverlapState ov = overlap_state(spec);
    return coincidence_profiles(spec.photon_profile(), spec.coherent_profile(), spec.tau,
                                std::sqrt(ov.sigma_abs2), ov.norm, t1, t2);
}

double pac_g2(const PacStateSpec& spec, double t1, double t2) {
    if (spec.n_alpha == 0.0) return 0.0;
    const LogEnvelopes e = log_envelopes(spec);
    return std::exp(log_coincidence(e, t1, t2) - log_flux(e, t1) - log_flux(e, t2));
}

CorrelationGrid g2_grid(const PacStateSpec& spec, const GridBounds& bounds,
                        const std::optional<EtaResult>& eta) {
    if (bounds.resolution < 2) throw ParameterError("g2_grid: resolution must be >= 2");
    if (!(bounds.t_max > bounds.t_min)) throw ParameterError("g2_grid: t_max must exceed t_min");
    const double shift = eta ? eta->retarded_shift : 0.0;

    CorrelationGrid grid;
    grid.t1_axis = linspace(bounds.t_min + shift, bounds.t_max + shift, bounds.resolution);
    grid.t2_axis = grid.t1_axis;
    const std::size_t n = grid.t1_axis.size();
    grid.values.resize(n * n);
    grid.flux.resize(n);

    if (spec.n_alpha == 0.0) {
        const OverlapState ov = overlap_state(spec);
        const auto photon = spec.photon_profile();
        const auto coherent = spec.coherent_profile();
        for (std::size_t i = 0; i < n; ++i) {
            grid.flux[i] = flux_profiles(photon, coherent, spec.tau, 0.0, ov.norm,
                                         grid.t1_axis[i] - shift);
        }
        std::fill(grid.values.begin(), grid.values.end(), 0.0);
        return grid;
    }

    const LogEnvelopes e = log_envelopes(spec);
    std::vector<double> lf1(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = grid.t1_axis[i] - shift;
        lf1[i] = log_flux(e, t);
        grid.flux[i] = std::exp(lf1[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        const double t1 = grid.t1_axis[i] - shift;
        for (std::size_t j = 0; j < n; ++j) {
            const double t2 = grid.t2_axis[j] - shift;
            grid.values[i * n + j] = std::exp(log_coincidence(e, t1, t2) - lf1[i] - lf1[j]);
        }
    }
    return grid;
}

CorrelationGrid g2_grid(const PulseProfile& photon, const PulseProfile& coherent, double tau,
                        const GridBounds& bounds) {
    if (bounds.resolution < 2) throw ParameterError("g2_grid: resolution must be >= 2");
    const std::complex<double> sigma = overlap_sigma(photon, coherent, tau);
    const double sig = std::abs(sigma);
    const double norm = normalization(sigma);

    CorrelationGrid grid;
    grid.t1_axis = linspace(bounds.t_min, bounds.t_max, bounds.resolution);
    grid.t2_axis = grid.t1_axis;
    const std::size_t n = grid.t1_axis.size();
    grid.values.resize(n * n);
    grid.flux.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        grid.flux[i] = flux_profiles(photon, coherent, tau, sig, norm, grid.t1_axis[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double denom = grid.flux[i] * grid.flux[j];
            const double num = coincidence_profiles(photon, coherent, tau, sig, norm,
                                                    grid.t1_axis[i], grid.t2_axis[j]);
            grid.values[i * n + j] = denom > 0.0 ? num / denom : kNaN;
        }
    }
    return grid;
}

double g2_zero(double n_alpha, double sigma_abs2) {
    if (n_alpha < 0.0) throw ParameterError("g2_zero: n_alpha must be >= 0");
    if (n_alpha == 0.0) return 0.0;
    const double sn = sigma_abs2 / (1.0 + sigma_abs2);
    const double f1 = 1.0 + n_alpha + sn;
    return 1.0 - (1.0 + sn * sn) / (f1 * f1);
}

double g2_zero(const PacStateSpec& spec) {
    const OverlapState ov = overlap_state(spec);
    return g2_zero(spec.n_alpha, ov.sigma_abs2);
}

double coherent_g2() { return 1.0; }

double fock_g2(int n) {
    if (n < 1) throw ParameterError("fock_g2: n must be >= 1");
    return 1.0 - 1.0 / static_cast<double>(n);
}

std::string grid_to_csv(const CorrelationGrid& grid) {
    std::string out = "# units: time in 1/Omega; g2 dimensionless; missing values empty\n";
    out += "t1,t2,g2\n";
    const std::size_t n = grid.t2_axis.size();
    for (std::size_t i = 0; i < grid.t1_axis.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out += format_value(grid.t1_axis[i]);
            out += ',';
            out += format_value(grid.t2_axis[j]);
            out += ',';
            const double v = grid.values[i * n + j];
            if (!std::isnan(v)) out += format_value(v);
            out += '\n';
        }
    }
    return out;
}

void write_grid_csv(const CorrelationGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("write_grid_csv: cannot open '" + path + "'");
    out << grid_to_csv(grid);
}

std::string grid_to_json(const CorrelationGrid& grid) {
    nlohmann::json j;
    j["units"] = {{"time", "1/Omega"}, {"g2", "dimensionless"}};
    j["t1_axis"] = grid.t1_axis;
    j["t2_axis"] = grid.t2_axis;
    j["values"] = grid.values;  // row-major over (t1, t2); NaN serializes as null
    j["flux_t1"] = grid.flux;
    return j.dump() + "\n";
}

void write_grid_json(const CorrelationGrid& grid, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParameterError("write_grid_json: cannot open '" + path + "'");
    out << grid_to_json(grid);
}

}  // namespace pacsim
