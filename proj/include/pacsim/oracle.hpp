#pragma once

#include <string>
#include <vector>

#include "pacsim/quadratures.hpp"

namespace pacsim {

/// One closed-form-vs-oracle comparison. rel_error uses
/// max(|closed_form|, 1) as the scale so near-zero quantities are compared
/// absolutely.
struct OracleReport {
    std::string label;
    double closed_form = 0.0;
    double quadrature = 0.0;
    double abs_error = 0.0;
    double rel_error = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

OracleReport make_report(std::string label, double closed_form, double oracle_value,
                         double tolerance);

/// n-dimensional tensor quadrature of the PAC photon-number probability
/// density against the closed-form P_n, n in {1, 2, 3}. sigma and N are
/// recomputed by quadrature inside the oracle. Throws ConvergenceError if
/// panel refinement cannot reach the tolerance.
OracleReport oracle_pn(const PacStateSpec& spec, int n, double tolerance = 1e-6);

/// Bernoulli series (lossless vector pushed through the loss sum) against
/// the closed-form lossy probability.
OracleReport oracle_pn_lossy(const PacStateSpec& spec, int n, double eta,
                             double tolerance = 1e-6);

/// Mean and variance by summation of the series-built lossy vector against
/// the closed forms. Returns {mean report, variance report}.
std::vector<OracleReport> oracle_mean_variance(const PacStateSpec& spec, double eta,
                                               double tolerance = 1e-6);

/// 1-D quadrature of the photon flux against the closed-form mean photon
/// number, and 2-D quadrature of the coincidence rate against the
/// closed-form coincidence count. Returns {flux report, coincidence report}.
std::vector<OracleReport> oracle_flux_and_coincidences(const PacStateSpec& spec,
                                                       double tolerance = 1e-6);

/// Quadrature-built f2 / f1^2 against the closed-form g2[0].
OracleReport oracle_g2zero(const PacStateSpec& spec, double tolerance = 1e-6);

/// Quadrature mean (1-D) and normal-ordered second moment (2-D) against the
/// closed-form windowed quadrature mean and variance. Returns {mean report,
/// variance report}.
std::vector<OracleReport> oracle_quadrature(const PacStateSpec& spec,
                                            const QuadratureWindow& window, PhaseChoice phase,
                                            double tolerance = 1e-6);

/// Fidelity assembled from quadrature overlaps against the closed form;
/// lossless and lossy variants.
OracleReport oracle_fidelity(const PacStateSpec& spec, double tolerance = 1e-6);
OracleReport oracle_fidelity_lossy(const PacStateSpec& spec, double eta,
                                   double tolerance = 1e-6);

/// Coherent-state baselines: n-D quadrature of the Poisson density, the
/// Bernoulli series, quadrature g2[0] = 1, and the flat T/4 quadrature
/// variance.
OracleReport oracle_coherent_pn(double n_alpha, int n, double omega0, double tolerance = 1e-6);
OracleReport oracle_coherent_pn_lossy(double n_alpha, int n, double eta, double tolerance = 1e-6);
OracleReport oracle_coherent_g2zero(double n_alpha, double omega0, double tolerance = 1e-6);
OracleReport oracle_coherent_quadrature(double n_alpha, double omega0, double tolerance = 1e-6);

/// Number-state baselines: Bernoulli series vs binomial, variance/mean ratio
/// 1 - eta, time-independent g2 = 1 - 1/n, and the windowed quadrature
/// variance.
OracleReport oracle_fock_pn_lossy(int m, int n, double eta, double tolerance = 1e-6);
OracleReport oracle_fock_g2zero(int n, double omega0, double tolerance = 1e-6);
OracleReport oracle_fock_quadrature(int n, double omega0, double tolerance = 1e-6);

struct OracleSuiteConfig {
    double tolerance = 1e-6;
    std::vector<double> taus = {0.0, 1.25, 2.5, 3.75, 5.0};
    std::vector<double> omega1s = {0.2, 1.4, 2.6, 3.8, 5.0};
    std::vector<double> n_alphas = {1.0, 3.0, 5.0};
    double omega = 1.0;
    double omega0 = 50.0;
    double eta = 0.5;
};

/// Every closed form in photon_statistics / correlations / quadratures /
/// fidelity compared against its independent oracle over the parameter
/// grid, plus the coherent and number-state baselines. Reports are sorted
/// by label.
std::vector<OracleReport> run_full_suite(const OracleSuiteConfig& config = {});

bool all_pass(const std::vector<OracleReport>& reports);

/// JSON report: {"tolerance":..., "all_pass":..., "reports":[...]}.
void write_report_json(const std::vector<OracleReport>& reports, double tolerance,
                       const std::string& path);

}  // namespace pacsim
