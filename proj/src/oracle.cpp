#include "pacsim/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <functional>
#include <numbers>
#include <optional>

#include <json.hpp>

#include "pacsim/correlations.hpp"
#include "pacsim/fidelity.hpp"
#include "pacsim/parallel.hpp"
#include "pacsim/photon_statistics.hpp"

namespace pacsim {

namespace {

using cplx = std::complex<double>;

constexpr double kSpan = 8.0;        // region half-width in pulse widths
constexpr int kBasePanels = 5;       // panels per region before refinement

std::string param_tag(const PacStateSpec& spec) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "[na=%g,tau=%g,w1=%g]", spec.n_alpha, spec.tau, spec.omega1);
    return buf;
}

// Complex pulse amplitudes sampled on a shared panel grid. xi carries the
// tau shift: xi[i] = photon amplitude at (t_i + tau).
struct SampledPair {
    PanelGrid grid;
    std::vector<cplx> xi;
    std::vector<cplx> al;
};

PanelGrid clip_grid(const PanelGrid& grid, const std::optional<QuadratureWindow>& window) {
    if (!window) return grid;
    PanelGrid out;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid.nodes[i] >= window->start && grid.nodes[i] <= window->end()) {
            out.nodes.push_back(grid.nodes[i]);
            out.weights.push_back(grid.weights[i]);
        }
    }
    return out;
}

SampledPair sample_pac(const PacStateSpec& spec, int points, int panels,
                       const std::optional<QuadratureWindow>& window = std::nullopt) {
    const PulseProfile photon = spec.photon_profile();
    const PulseProfile coherent = spec.coherent_profile();
    std::vector<SupportRegion> regions = {
        {photon.center_time() - spec.tau, photon.width()},
        {coherent.center_time(), coherent.width()},
    };
    SampledPair s;
    s.grid = clip_grid(make_panel_grid(regions, points, kSpan, panels), window);
    s.xi.resize(s.grid.size());
    s.al.resize(s.grid.size());
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        s.xi[i] = photon.amplitude(s.grid.nodes[i] + spec.tau);
        s.al[i] = coherent.amplitude(s.grid.nodes[i]);
    }
    return s;
}

SampledPair sample_single(const PulseProfile& profile, int points, int panels,
                          const std::optional<QuadratureWindow>& window = std::nullopt) {
    SampledPair s;
    s.grid = clip_grid(
        make_panel_grid({{profile.center_time(), profile.width()}}, points, kSpan, panels),
        window);
    s.xi.resize(s.grid.size());
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        s.xi[i] = profile.amplitude(s.grid.nodes[i]);
    }
    s.al = s.xi;
    return s;
}

cplx grid_sigma(const SampledPair& s) {
    cplx sum{0.0, 0.0};
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        sum += s.grid.weights[i] * std::conj(s.xi[i]) * s.al[i];
    }
    return sum;
}

double grid_nalpha(const SampledPair& s) {
    double sum = 0.0;
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        sum += s.grid.weights[i] * std::norm(s.al[i]);
    }
    return sum;
}

struct RefinedValue {
    double value = 0.0;
    double error_estimate = 0.0;
    bool converged = false;
};

// Evaluates the quantity on GL15 and GL10 node sets over the same panels,
// doubling the panel count until the two orders agree within the budget.
RefinedValue refine(double budget,
                    const std::function<double(int points, int panels)>& eval) {
    RefinedValue r;
    for (int panels : {kBasePanels, 2 * kBasePanels, 4 * kBasePanels}) {
        const double v15 = eval(15, panels);
        const double v10 = eval(10, panels);
        r.value = v15;
        r.error_estimate = std::abs(v15 - v10);
        if (r.error_estimate <= budget) {
            r.converged = true;
            break;
        }
    }
    return r;
}

OracleReport finish_report(std::string label, double closed_form, const RefinedValue& rv,
                           double tolerance) {
    OracleReport rep = make_report(std::move(label), closed_form, rv.value, tolerance);
    if (!rv.converged) rep.pass = false;
    return rep;
}

double error_budget(double closed_form, double tolerance) {
    return 0.25 * tolerance * std::max(std::abs(closed_form), 1.0);
}

// n-dimensional integral of the PAC photon-number density on the sampled
// grid (n <= 3): |sum_k xi(t_k + tau) prod_{i != k} alpha(t_i)|^2 e^(-n_a)
// |N| / n!.
double pac_density_integral(const SampledPair& s, int n) {
    const cplx sigma = grid_sigma(s);
    const double n_q = grid_nalpha(s);
    const double norm_q = 1.0 / (1.0 + std::norm(sigma));
    const std::size_t m = s.grid.size();
    const auto& w = s.grid.weights;
    double total = 0.0;
    if (n == 1) {
        for (std::size_t i = 0; i < m; ++i) total += w[i] * std::norm(s.xi[i]);
    } else if (n == 2) {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const cplx amp = s.xi[i] * s.al[j] + s.al[i] * s.xi[j];
                total += w[i] * w[j] * std::norm(amp);
            }
        }
        total /= 2.0;
    } else {
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const cplx xa = s.xi[i] * s.al[j] + s.al[i] * s.xi[j];
                const cplx aa = s.al[i] * s.al[j];
                const double wij = w[i] * w[j];
                for (std::size_t k = 0; k < m; ++k) {
                    const cplx amp = xa * s.al[k] + aa * s.xi[k];
                    total += wij * w[k] * std::norm(amp);
                }
            }
        }
        total /= 6.0;
    }
    return norm_q * std::exp(-n_q) * total;
}

// Lossless PAC vector long enough that the remaining mass is < 1e-16.
std::vector<double> pac_vector(double n_alpha, double sigma_abs2) {
    std::vector<double> p;
    double cumulative = 0.0;
    for (int n = 0; n <= 400; ++n) {
        p.push_back(pac_pn(n_alpha, sigma_abs2, n));
        cumulative += p.back();
        if (1.0 - cumulative < 1e-16 && n > 2) break;
    }
    return p;
}

double bernoulli_series(const std::vector<double>& lossless, int n, double eta) {
    if (eta == 1.0) {
        return n < static_cast<int>(lossless.size()) ? lossless[static_cast<std::size_t>(n)] : 0.0;
    }
    if (eta == 0.0) return n == 0 ? 1.0 : 0.0;
    double sum = 0.0;
    const double log_eta = std::log(eta);
    const double log_q = std::log(1.0 - eta);
    for (int m = n; m < static_cast<int>(lossless.size()); ++m) {
        const double pm = lossless[static_cast<std::size_t>(m)];
        if (pm <= 0.0) continue;
        const double lb = std::lgamma(m + 1.0) - std::lgamma(n + 1.0) - std::lgamma(m - n + 1.0);
        sum += std::exp(n * log_eta + (m - n) * log_q + lb + std::log(pm));
    }
    return sum;
}

// Integrals of the flux and coincidence expressions with quadrature sigma.
double flux_integral(const SampledPair& s) {
    const double sig = std::abs(grid_sigma(s));
    const double norm = 1.0 / (1.0 + sig * sig);
    double total = 0.0;
    for (std::size_t i = 0; i < s.grid.size(); ++i) {
        const double x = std::abs(s.xi[i]);
        const double a = std::abs(s.al[i]);
        total += s.grid.weights[i] * (a * a + 2.0 * norm * sig * x * a + norm * x * x);
    }
    return total;
}

double coincidence_integral(const SampledPair& s) {
    const double sig = std::abs(grid_sigma(s));
    const double norm = 1.0 / (1.0 + sig * sig);
    const std::size_t m = s.grid.size();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        const double x1 = std::abs(s.xi[i]);
        const double a1 = std::abs(s.al[i]);
        for (std::size_t j = 0; j < m; ++j) {
            const double x2 = std::abs(s.xi[j]);
            const double a2 = std::abs(s.al[j]);
            const double f2 = norm * (x1 * x1 * a2 * a2 + x2 * x2 * a1 * a1 +
                                      a1 * a1 * a2 * a2 / norm + 2.0 * x1 * x2 * a1 * a2 +
                                      2.0 * sig * x1 * a1 * a2 * a2 + 2.0 * sig * x2 * a2 * a1 * a1);
            total += s.grid.weights[i] * s.grid.weights[j] * f2;
        }
    }
    return total;
}

// Quadrature moments via the raw correlators. The local-oscillator phase
// phi(t) = omega0 t + offset multiplies as exp(+i phi) so it tracks the
// pulse carrier.
struct QuadMoments {
    double mean = 0.0;
    double second = 0.0;  // <:X^2:>
};

QuadMoments pac_quad_moments(const PacStateSpec& spec, const SampledPair& s, double offset) {
    const cplx sigma = grid_sigma(s);
    const double s2 = std::norm(sigma);
    const double norm = 1.0 / (1.0 + s2);
    const std::size_t m = s.grid.size();
    std::vector<cplx> phase(m);
    for (std::size_t i = 0; i < m; ++i) {
        phase[i] = std::polar(1.0, spec.omega0 * s.grid.nodes[i] + offset);
    }
    QuadMoments q;
    std::vector<cplx> mean_corr(m);
    for (std::size_t i = 0; i < m; ++i) {
        mean_corr[i] = norm * (sigma * s.xi[i] + s.al[i] * (1.0 + s2));
        q.mean += s.grid.weights[i] * std::real(mean_corr[i] * phase[i]);
    }
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            const cplx aa = norm * ((1.0 + s2) * s.al[i] * s.al[j] + sigma * s.xi[i] * s.al[j] +
                                    sigma * s.al[i] * s.xi[j]);
            const cplx ada = norm * ((1.0 + s2) * std::conj(s.al[j]) * s.al[i] +
                                     sigma * s.xi[i] * std::conj(s.al[j]) +
                                     std::conj(sigma) * s.al[i] * std::conj(s.xi[j]) +
                                     s.xi[i] * std::conj(s.xi[j]));
            q.second += 0.5 * s.grid.weights[i] * s.grid.weights[j] *
                        std::real(aa * phase[i] * phase[j] + ada * phase[i] * std::conj(phase[j]));
        }
    }
    return q;
}

}  // namespace

OracleReport make_report(std::string label, double closed_form, double oracle_value,
                         double tolerance) {
    OracleReport r;
    r.label = std::move(label);
    r.closed_form = closed_form;
    r.quadrature = oracle_value;
    r.abs_error = std::abs(closed_form - oracle_value);
    r.rel_error = r.abs_error / std::max(std::abs(closed_form), 1.0);
    r.tolerance = tolerance;
    r.pass = r.rel_error <= tolerance;
    return r;
}

OracleReport oracle_pn(const PacStateSpec& spec, int n, double tolerance) {
    if (n < 1 || n > 3) throw ParameterError("oracle_pn: n must be in {1, 2, 3}");
    const OverlapState ov = overlap_state(spec);
    const double closed = pac_pn(spec.n_alpha, ov.sigma_abs2, n);
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        return pac_density_integral(sample_pac(spec, points, panels), n);
    });
    return finish_report("pac_pn" + std::to_string(n) + param_tag(spec), closed, rv, tolerance);
}

OracleReport oracle_pn_lossy(const PacStateSpec& spec, int n, double eta, double tolerance) {
    if (n < 0) throw ParameterError("oracle_pn_lossy: n must be >= 0");
    const OverlapState ov = overlap_state(spec);
    const double closed = pac_pn_lossy(spec.n_alpha, ov.sigma_abs2, n, eta);
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        const double s2 = std::norm(grid_sigma(sample_pac(spec, points, panels)));
        return bernoulli_series(pac_vector(spec.n_alpha, s2), n, eta);
    });
    char buf[64];
    std::snprintf(buf, sizeof(buf), "pac_pn%d_lossy[eta=%g]", n, eta);
    return finish_report(buf + param_tag(spec), closed, rv, tolerance);
}

std::vector<OracleReport> oracle_mean_variance(const PacStateSpec& spec, double eta,
                                               double tolerance) {
    const auto [closed_mean, closed_var] = pac_mean_variance(spec, eta);
    const RefinedValue mean_rv =
        refine(error_budget(closed_mean, tolerance), [&](int points, int panels) {
            const double s2 = std::norm(grid_sigma(sample_pac(spec, points, panels)));
            const auto lossless = pac_vector(spec.n_alpha, s2);
            double mean = 0.0;
            for (int m = 0; m < static_cast<int>(lossless.size()); ++m) {
                mean += m * bernoulli_series(lossless, m, eta);
            }
            return mean;
        });
    const RefinedValue var_rv =
        refine(error_budget(closed_var, tolerance), [&](int points, int panels) {
            const double s2 = std::norm(grid_sigma(sample_pac(spec, points, panels)));
            const auto lossless = pac_vector(spec.n_alpha, s2);
            std::vector<double> lossy(lossless.size());
            for (int m = 0; m < static_cast<int>(lossless.size()); ++m) {
                lossy[static_cast<std::size_t>(m)] = bernoulli_series(lossless, m, eta);
            }
            return moments_from_vector(lossy).second;
        });
    char buf[48];
    std::snprintf(buf, sizeof(buf), "[eta=%g]", eta);
    return {
        finish_report(std::string("pac_mean") + buf + param_tag(spec), closed_mean, mean_rv,
                      tolerance),
        finish_report(std::string("pac_variance") + buf + param_tag(spec), closed_var, var_rv,
                      tolerance),
    };
}

std::vector<OracleReport> oracle_flux_and_coincidences(const PacStateSpec& spec,
                                                       double tolerance) {
    const OverlapState ov = overlap_state(spec);
    const double sn = ov.sigma_abs2 * ov.norm;
    const double closed_f1 = 1.0 + spec.n_alpha + sn;
    const double closed_f2 =
        spec.n_alpha * spec.n_alpha + 2.0 * spec.n_alpha + 2.0 * sn * (spec.n_alpha + 1.0);
    const RefinedValue f1 = refine(error_budget(closed_f1, tolerance), [&](int points, int panels) {
        return flux_integral(sample_pac(spec, points, panels));
    });
    const RefinedValue f2 = refine(error_budget(closed_f2, tolerance), [&](int points, int panels) {
        return coincidence_integral(sample_pac(spec, points, panels));
    });
    return {
        finish_report("pac_flux_integral" + param_tag(spec), closed_f1, f1, tolerance),
        finish_report("pac_coincidence_integral" + param_tag(spec), closed_f2, f2, tolerance),
    };
}

OracleReport oracle_g2zero(const PacStateSpec& spec, double tolerance) {
    const double closed = g2_zero(spec);
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        const SampledPair s = sample_pac(spec, points, panels);
        const double f1 = flux_integral(s);
        return coincidence_integral(s) / (f1 * f1);
    });
    return finish_report("pac_g2zero" + param_tag(spec), closed, rv, tolerance);
}

std::vector<OracleReport> oracle_quadrature(const PacStateSpec& spec,
                                            const QuadratureWindow& window, PhaseChoice phase,
                                            double tolerance) {
    const double closed_mean = pac_quadrature_mean(spec, window, phase);
    const QuadratureResult closed_var = pac_quadrature_variance(spec, window, phase);
    const RefinedValue mean_rv =
        refine(error_budget(closed_mean, tolerance), [&](int points, int panels) {
            return pac_quad_moments(spec, sample_pac(spec, points, panels, window), phase.offset)
                .mean;
        });
    const RefinedValue var_rv =
        refine(error_budget(closed_var.variance, tolerance), [&](int points, int panels) {
            const QuadMoments q =
                pac_quad_moments(spec, sample_pac(spec, points, panels, window), phase.offset);
            return 0.25 * window.duration + q.second - q.mean * q.mean;
        });
    char buf[48];
    std::snprintf(buf, sizeof(buf), "[phi=theta+%g]", phase.offset);
    return {
        finish_report(std::string("pac_quad_mean") + buf + param_tag(spec), closed_mean, mean_rv,
                      tolerance),
        finish_report(std::string("pac_quad_variance") + buf + param_tag(spec),
                      closed_var.variance, var_rv, tolerance),
    };
}

OracleReport oracle_fidelity(const PacStateSpec& spec, double tolerance) {
    const double closed = fidelity(spec).value;
    const PulseProfile ideal = PulseProfile::gaussian(spec.omega, 0.0, 1.0, spec.omega0);
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        const SampledPair s = sample_pac(spec, points, panels);
        const cplx sigma = grid_sigma(s);
        const double n_q = grid_nalpha(s);
        cplx rho{0.0, 0.0};
        for (std::size_t i = 0; i < s.grid.size(); ++i) {
            rho += s.grid.weights[i] * std::conj(ideal.amplitude(s.grid.nodes[i])) * s.xi[i];
        }
        const double norm_q = 1.0 / (1.0 + std::norm(sigma));
        return norm_q / (1.0 + n_q) * std::norm(rho + std::conj(sigma) * std::sqrt(n_q));
    });
    return finish_report("pac_fidelity" + param_tag(spec), closed, rv, tolerance);
}

OracleReport oracle_fidelity_lossy(const PacStateSpec& spec, double eta, double tolerance) {
    const double closed = fidelity_lossy(spec, eta).value;
    const PulseProfile ideal = PulseProfile::gaussian(spec.omega, 0.0, 1.0, spec.omega0);
    const double root = std::sqrt(eta);
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        const SampledPair s = sample_pac(spec, points, panels);
        const cplx sigma = grid_sigma(s);
        const double n_q = grid_nalpha(s);
        cplx rho{0.0, 0.0};
        for (std::size_t i = 0; i < s.grid.size(); ++i) {
            rho += s.grid.weights[i] * std::conj(ideal.amplitude(s.grid.nodes[i])) * s.xi[i];
        }
        const double norm_q = 1.0 / (1.0 + std::norm(sigma));
        // guided-mode overlap exp(-n (1 - sqrt(eta))^2), environment
        // projection exp(-(1 - eta) n).
        const double log_overlaps =
            -n_q * (1.0 - root) * (1.0 - root) - (1.0 - eta) * n_q;
        return eta * norm_q / (1.0 + n_q) * std::exp(log_overlaps) *
               std::norm(rho + root * std::conj(sigma) * std::sqrt(n_q));
    });
    char buf[48];
    std::snprintf(buf, sizeof(buf), "pac_fidelity_lossy[eta=%g]", eta);
    return finish_report(buf + param_tag(spec), closed, rv, tolerance);
}

OracleReport oracle_coherent_pn(double n_alpha, int n, double omega0, double tolerance) {
    if (n < 1 || n > 3) throw ParameterError("oracle_coherent_pn: n must be in {1, 2, 3}");
    const double closed = coherent_pn(n_alpha, n, 1.0);
    const PulseProfile profile = PulseProfile::gaussian(1.0, 0.0, std::sqrt(n_alpha), omega0);
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        const SampledPair s = sample_single(profile, points, panels);
        const double n_q = grid_nalpha(s);
        // density prod_i |alpha(t_i)|^2 e^(-n_a) / n! on the tensor grid
        double one = 0.0;
        for (std::size_t i = 0; i < s.grid.size(); ++i) {
            one += s.grid.weights[i] * std::norm(s.al[i]);
        }
        double total = 1.0;
        for (int k = 0; k < n; ++k) total *= one;
        double fact = 1.0;
        for (int k = 2; k <= n; ++k) fact *= k;
        return total * std::exp(-n_q) / fact;
    });
    char buf[64];
    std::snprintf(buf, sizeof(buf), "coherent_pn%d[na=%g]", n, n_alpha);
    return finish_report(buf, closed, rv, tolerance);
}

OracleReport oracle_coherent_pn_lossy(double n_alpha, int n, double eta, double tolerance) {
    const double closed = coherent_pn(n_alpha, n, eta);
    std::vector<double> poisson;
    double cumulative = 0.0;
    for (int m = 0; m <= 400; ++m) {
        poisson.push_back(coherent_pn(n_alpha, m, 1.0));
        cumulative += poisson.back();
        if (1.0 - cumulative < 1e-16 && m > 2) break;
    }
    const double series = bernoulli_series(poisson, n, eta);
    char buf[64];
    std::snprintf(buf, sizeof(buf), "coherent_pn%d_lossy[na=%g,eta=%g]", n, n_alpha, eta);
    return make_report(buf, closed, series, tolerance);
}

OracleReport oracle_coherent_g2zero(double n_alpha, double omega0, double tolerance) {
    const PulseProfile profile = PulseProfile::gaussian(1.0, 0.0, std::sqrt(n_alpha), omega0);
    const RefinedValue rv = refine(error_budget(1.0, tolerance), [&](int points, int panels) {
        const SampledPair s = sample_single(profile, points, panels);
        const std::size_t m = s.grid.size();
        double f1 = 0.0;
        for (std::size_t i = 0; i < m; ++i) f1 += s.grid.weights[i] * std::norm(s.al[i]);
        double f2 = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                f2 += s.grid.weights[i] * s.grid.weights[j] * std::norm(s.al[i]) *
                      std::norm(s.al[j]);
            }
        }
        return f2 / (f1 * f1);
    });
    char buf[48];
    std::snprintf(buf, sizeof(buf), "coherent_g2zero[na=%g]", n_alpha);
    return finish_report(buf, 1.0, rv, tolerance);
}

OracleReport oracle_coherent_quadrature(double n_alpha, double omega0, double tolerance) {
    const PulseProfile profile = PulseProfile::gaussian(1.0, 0.0, std::sqrt(n_alpha), omega0);
    const QuadratureWindow window{-10.0, 20.0};
    const double closed = 0.25 * window.duration;
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        const SampledPair s = sample_single(profile, points, panels, window);
        const std::size_t m = s.grid.size();
        double mean = 0.0;
        double second = 0.0;
        std::vector<cplx> phase(m);
        for (std::size_t i = 0; i < m; ++i) {
            phase[i] = std::polar(1.0, omega0 * s.grid.nodes[i]);
            mean += s.grid.weights[i] * std::real(s.al[i] * phase[i]);
        }
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                const cplx aa = s.al[i] * s.al[j];
                const cplx ada = std::conj(s.al[j]) * s.al[i];
                second += 0.5 * s.grid.weights[i] * s.grid.weights[j] *
                          std::real(aa * phase[i] * phase[j] +
                                    ada * phase[i] * std::conj(phase[j]));
            }
        }
        return 0.25 * window.duration + second - mean * mean;
    });
    char buf[48];
    std::snprintf(buf, sizeof(buf), "coherent_quad_variance[na=%g]", n_alpha);
    return finish_report(buf, closed, rv, tolerance);
}

OracleReport oracle_fock_pn_lossy(int m, int n, double eta, double tolerance) {
    const double closed = fock_pn(m, n, eta);
    // Independent route: exact integer binomials with repeated products
    // (no lgamma), applied to the delta distribution.
    double series = 0.0;
    if (n <= m) {
        double binom = 1.0;
        for (int k = 0; k < n; ++k) binom *= static_cast<double>(m - k) / (k + 1);
        series = binom * std::pow(eta, n) * std::pow(1.0 - eta, m - n);
    }
    char buf[64];
    std::snprintf(buf, sizeof(buf), "fock_pn%d_lossy[m=%d,eta=%g]", n, m, eta);
    return make_report(buf, closed, series, tolerance);
}

OracleReport oracle_fock_g2zero(int n, double omega0, double tolerance) {
    const double closed = fock_g2(n);
    const PulseProfile profile = PulseProfile::gaussian(1.0, 0.0, 1.0, omega0);
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        const SampledPair s = sample_single(profile, points, panels);
        double f1 = 0.0;
        for (std::size_t i = 0; i < s.grid.size(); ++i) {
            f1 += s.grid.weights[i] * std::norm(s.xi[i]);
        }
        const double flux_total = n * f1;
        const double coincidences = n * (n - 1.0) * f1 * f1;
        return coincidences / (flux_total * flux_total);
    });
    char buf[48];
    std::snprintf(buf, sizeof(buf), "fock_g2zero[n=%d]", n);
    return finish_report(buf, closed, rv, tolerance);
}

OracleReport oracle_fock_quadrature(int n, double omega0, double tolerance) {
    const PulseProfile profile = PulseProfile::gaussian(1.0, 0.0, 1.0, omega0);
    const QuadratureWindow window{-10.0, 20.0};
    const double closed = fock_quadrature_variance(n, profile, window).variance;
    const RefinedValue rv = refine(error_budget(closed, tolerance), [&](int points, int panels) {
        const SampledPair s = sample_single(profile, points, panels, window);
        const std::size_t m = s.grid.size();
        double second = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const cplx pi = std::polar(1.0, omega0 * s.grid.nodes[i]);
            for (std::size_t j = 0; j < m; ++j) {
                const cplx pj = std::polar(1.0, omega0 * s.grid.nodes[j]);
                const cplx ada = static_cast<double>(n) * s.xi[i] * std::conj(s.xi[j]);
                second += 0.5 * s.grid.weights[i] * s.grid.weights[j] *
                          std::real(ada * pi * std::conj(pj));
            }
        }
        return 0.25 * window.duration + second;
    });
    char buf[48];
    std::snprintf(buf, sizeof(buf), "fock_quad_variance[n=%d]", n);
    return finish_report(buf, closed, rv, tolerance);
}

std::vector<OracleReport> run_full_suite(const OracleSuiteConfig& config) {
    const double tol = config.tolerance;

    std::vector<PacStateSpec> points;
    for (double na : config.n_alphas) {
        for (double tau : config.taus) {
            for (double w1 : config.omega1s) {
                points.push_back({na, config.omega, w1 * config.omega, tau / config.omega,
                                  config.omega0});
            }
        }
    }

    std::vector<std::vector<OracleReport>> slots(points.size());
    parallel_for(points.size(), [&](std::size_t i) {
        const PacStateSpec& spec = points[i];
        std::vector<OracleReport>& out = slots[i];
        for (int n = 1; n <= 3; ++n) out.push_back(oracle_pn(spec, n, tol));
        for (int n : {0, 1, 4}) out.push_back(oracle_pn_lossy(spec, n, config.eta, tol));
        for (double eta : {1.0, config.eta}) {
            auto mv = oracle_mean_variance(spec, eta, tol);
            out.insert(out.end(), mv.begin(), mv.end());
        }
        auto fc = oracle_flux_and_coincidences(spec, tol);
        out.insert(out.end(), fc.begin(), fc.end());
        out.push_back(oracle_g2zero(spec, tol));
        const QuadratureWindow window = default_window(spec);
        for (PhaseChoice phase : {PhaseChoice::in_phase(), PhaseChoice::out_of_phase(),
                                  PhaseChoice{0.7}}) {
            auto q = oracle_quadrature(spec, window, phase, tol);
            out.insert(out.end(), q.begin(), q.end());
        }
        out.push_back(oracle_fidelity(spec, tol));
        out.push_back(oracle_fidelity_lossy(spec, config.eta, tol));
    });

    std::vector<OracleReport> reports;
    for (auto& s : slots) reports.insert(reports.end(), s.begin(), s.end());

    // Coherent and number-state baselines.
    for (int n = 1; n <= 3; ++n) reports.push_back(oracle_coherent_pn(4.0, n, config.omega0, tol));
    for (int n : {0, 2, 5}) reports.push_back(oracle_coherent_pn_lossy(4.0, n, config.eta, tol));
    reports.push_back(oracle_coherent_g2zero(4.0, config.omega0, tol));
    reports.push_back(oracle_coherent_quadrature(4.0, config.omega0, tol));
    for (int n : {0, 2, 4}) reports.push_back(oracle_fock_pn_lossy(4, n, config.eta, tol));
    reports.push_back(oracle_fock_g2zero(4, config.omega0, tol));
    reports.push_back(oracle_fock_quadrature(1, config.omega0, tol));

    std::sort(reports.begin(), reports.end(),
              [](const OracleReport& l, const OracleReport& r) { return l.label < r.label; });
    return reports;
}

bool all_pass(const std::vector<OracleReport>& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](const OracleReport& r) { return r.pass; });
}

void write_report_json(const std::vector<OracleReport>& reports, double tolerance,
                       const std::string& path) {
    nlohmann::json j;
    j["tolerance"] = tolerance;
    j["all_pass"] = all_pass(reports);
    j["count"] = reports.size();
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        arr.push_back({{"label", r.label},
                       {"closed_form", r.closed_form},
                       {"quadrature", r.quadrature},
                       {"abs_error", r.abs_error},
                       {"rel_error", r.rel_error},
                       {"tolerance", r.tolerance},
                       {"pass", r.pass}});
    }
    j["reports"] = std::move(arr);
    std::ofstream out(path);
    if (!out) throw ParameterError("write_report_json: cannot open '" + path + "'");
    out << j.dump(2) << '\n';
}

}  // namespace pacsim
