// pacsim: photon-added coherent state pulse calculator.
//
// Subcommands: pnum, sweep, g2grid, quad, fidelity, oracle, presets.
// Every subcommand accepts --config FILE (INI key=value, keys equal to the
// long option names). Units: time in 1/Omega, bandwidth in Omega, length in
// um, probabilities dimensionless. Thread count: PACSIM_THREADS.
#include <cmath>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "pacsim/correlations.hpp"
#include "pacsim/fidelity.hpp"
#include "pacsim/io.hpp"
#include "pacsim/oracle.hpp"
#include "pacsim/photon_statistics.hpp"
#include "pacsim/propagation.hpp"
#include "pacsim/quadratures.hpp"
#include "pacsim/sweep.hpp"

using namespace pacsim;

namespace {

const char* kUnits =
    "time in 1/Omega; bandwidth in Omega; length in um; probabilities dimensionless";

struct StateOptions {
    double n_alpha = 3.0;
    double omega = 1.0;
    double omega1 = 1.0;
    double tau = 0.0;
    double omega0 = 100.0;

    PacStateSpec spec() const { return {n_alpha, omega, omega1, tau, omega0}; }
};

struct LossOptions {
    std::string preset;
    double length = 0.0;
    double eta = 1.0;
    std::string channels_file;

    std::vector<LossChannel> channels() const {
        return channels_file.empty() ? presets() : load_channels(channels_file);
    }
    // Resolves to (|eta|, retarded shift).
    EtaResult resolve() const {
        if (!preset.empty()) {
            return eta_of_length(find_channel(channels(), preset), length);
        }
        if (eta < 0.0 || eta > 1.0) throw ParameterError("--eta must lie in [0, 1]");
        return {eta, 0.0, 0.0};
    }
};

void add_state_options(CLI::App* cmd, StateOptions& state) {
    cmd->add_option("--nalpha", state.n_alpha, "coherent mean photon number");
    cmd->add_option("--omega", state.omega, "coherent bandwidth (units of Omega)");
    cmd->add_option("--omega1", state.omega1, "photon bandwidth (units of Omega)");
    cmd->add_option("--tau", state.tau, "photon temporal offset (units of 1/Omega)");
    cmd->add_option("--omega0", state.omega0, "central frequency (>= 10 Omega)");
}

void add_loss_options(CLI::App* cmd, LossOptions& loss, bool with_eta = true) {
    cmd->add_option("--preset", loss.preset, "loss channel preset (see `pacsim presets`)");
    cmd->add_option("--L", loss.length, "propagation length in um");
    if (with_eta) cmd->add_option("--eta", loss.eta, "loss factor |eta| directly");
    cmd->add_option("--channels", loss.channels_file, "channel table file (key=value)");
}

void warn_narrowband(const PacStateSpec& spec) {
    if (!spec.narrowband_valid()) {
        std::cerr << "warning: omega0 < 10 Omega violates the narrowband approximation\n";
    }
}

void emit(const Table& table, const std::string& output, const std::string& format) {
    write_text(output, format == "json" ? table_to_json(table) : table_to_csv(table));
}

int run_pnum(const StateOptions& state, const LossOptions& loss, const std::string& state_kind,
             int fock_m, std::vector<double> etas, int nmax, const std::string& output,
             const std::string& format) {
    if (!loss.preset.empty()) {
        etas = {loss.resolve().magnitude};
    } else if (etas.empty()) {
        etas = {1.0, 0.75, 0.5, 0.25, 0.0};
    }
    Table table;
    table.units = kUnits;
    table.columns = {"eta", "n", "P_n", "mean", "variance"};
    for (double eta : etas) {
        PhotonDistribution dist;
        if (state_kind == "pac") {
            warn_narrowband(state.spec());
            dist = pac_distribution(state.spec(), eta);
        } else if (state_kind == "coherent") {
            dist = coherent_distribution(state.n_alpha, eta);
        } else if (state_kind == "fock") {
            dist = fock_distribution(fock_m, eta);
        } else {
            throw ParameterError("--state must be pac, coherent or fock");
        }
        const int top = nmax >= 0 ? std::min(nmax, dist.n_max()) : dist.n_max();
        for (int n = 0; n <= top; ++n) {
            table.rows.push_back({eta, static_cast<double>(n),
                                  dist.probabilities[static_cast<std::size_t>(n)], dist.mean,
                                  dist.variance});
        }
    }
    emit(table, output, format);
    return 0;
}

int run_quad(const StateOptions& state, const LossOptions& loss, const std::string& phase_name,
             std::vector<double> window_spec, const std::string& output) {
    PhaseChoice phase;
    if (phase_name == "theta") {
        phase = PhaseChoice::in_phase();
    } else if (phase_name == "theta+pi/2") {
        phase = PhaseChoice::out_of_phase();
    } else {
        try {
            phase = PhaseChoice{std::stod(phase_name)};
        } catch (const std::exception&) {
            throw ParameterError("--phase must be theta, theta+pi/2 or a constant offset");
        }
    }
    const PacStateSpec spec = state.spec();
    warn_narrowband(spec);
    QuadratureWindow window = default_window(spec);
    if (!window_spec.empty()) {
        if (window_spec.size() != 2) throw ParameterError("--window needs START DURATION");
        window = {window_spec[0], window_spec[1]};
    }
    const QuadratureResult r = lossy_quadrature(spec, window, loss.resolve(), phase);
    std::string text;
    text += "mean = " + format_value(r.mean) + "\n";
    text += "variance = " + format_value(r.variance) + "\n";
    text += "baseline_T_over_4 = " + format_value(r.baseline) + "\n";
    text += "squeezing_depth = " + format_value(r.squeezing_depth) + "\n";
    text += "squeezed = " + std::string(r.squeezing_depth < 0.0 ? "yes" : "no") + "\n";
    text += "eta = " + format_value(r.eta) + "\n";
    write_text(output, text);
    return 0;
}

int run_fidelity(const StateOptions& state, const LossOptions& loss, const std::string& output) {
    const PacStateSpec spec = state.spec();
    warn_narrowband(spec);
    const EtaResult eta = loss.resolve();
    const FidelityResult r =
        eta.magnitude < 1.0 ? fidelity_lossy(spec, eta.magnitude) : fidelity(spec);
    std::string text;
    text += "fidelity = " + format_value(r.value) + "\n";
    text += "sigma_abs2 = " + format_value(r.sigma_abs2) + "\n";
    text += "normalization = " + format_value(r.norm) + "\n";
    text += "eta = " + format_value(r.eta) + "\n";
    write_text(output, text);
    return 0;
}

int run_oracle(double tolerance, const std::string& report_path, bool quick,
               const std::string& output) {
    OracleSuiteConfig config;
    config.tolerance = tolerance;
    if (quick) {
        config.taus = {0.0, 2.5};
        config.omega1s = {1.0, 3.8};
        config.n_alphas = {3.0};
    }
    const auto reports = run_full_suite(config);
    if (!report_path.empty()) write_report_json(reports, tolerance, report_path);
    int failed = 0;
    std::string text;
    for (const auto& r : reports) {
        if (!r.pass) {
            ++failed;
            text += "FAIL " + r.label + ": closed " + format_value(r.closed_form) +
                    " vs oracle " + format_value(r.quadrature) + " (rel " +
                    format_value(r.rel_error) + ")\n";
        }
    }
    text += "oracle: " + std::to_string(reports.size() - failed) + "/" +
            std::to_string(reports.size()) + " comparisons within " + format_value(tolerance) +
            "\n";
    write_text(output, text);
    return failed == 0 ? 0 : 1;
}

int run_presets(const LossOptions& loss, bool table_mode, double lmax, int steps,
                const std::string& output, const std::string& format) {
    const auto channels = loss.channels();
    if (!table_mode) {
        std::string text = "# units: " + std::string(kUnits) + "\nlabel,k_i,k_r,v_g\n";
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& c : channels) {
            text += c.label + ',' + format_value(c.k_i) + ',' + format_value(c.k_r) + ',' +
                    format_value(c.v_g) + '\n';
            rows.push_back(
                {{"label", c.label}, {"k_i", c.k_i}, {"k_r", c.k_r}, {"v_g", c.v_g}});
        }
        if (format == "json") {
            nlohmann::json j{{"units", kUnits}, {"channels", rows}};
            write_text(output, j.dump() + "\n");
        } else {
            write_text(output, text);
        }
        return 0;
    }
    if (steps < 1) throw ParameterError("--steps must be >= 1");
    std::string text = "# units: " + std::string(kUnits) + "\nlabel,L,eta\n";
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& c : channels) {
        for (int i = 0; i <= steps; ++i) {
            const double L = lmax * static_cast<double>(i) / steps;
            const double eta = eta_of_length(c, L).magnitude;
            text += c.label + ',' + format_value(L) + ',' + format_value(eta) + '\n';
            rows.push_back({{"label", c.label}, {"L", L}, {"eta", eta}});
        }
    }
    if (format == "json") {
        nlohmann::json j{{"units", kUnits}, {"rows", rows}};
        write_text(output, j.dump() + "\n");
    } else {
        write_text(output, text);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"continuous-mode photon-added coherent state pulse calculator"};
    app.require_subcommand(1);

    // ---- pnum ----
    auto* pnum = app.add_subcommand("pnum", "photon-number distribution tables");
    pnum->set_config("--config");
    StateOptions pnum_state;
    LossOptions pnum_loss;
    std::string pnum_kind = "pac";
    int pnum_m = 4;
    std::vector<double> pnum_etas;
    int pnum_nmax = -1;
    std::string pnum_out, pnum_format = "csv";
    add_state_options(pnum, pnum_state);
    add_loss_options(pnum, pnum_loss, false);
    pnum->add_option("--state", pnum_kind, "pac | coherent | fock");
    pnum->add_option("--m", pnum_m, "photon count for --state fock");
    pnum->add_option("--eta", pnum_etas, "loss factors (default 1,0.75,0.5,0.25,0)");
    pnum->add_option("--nmax", pnum_nmax, "truncate rows at this photon number");
    pnum->add_option("--output", pnum_out, "output path (default stdout)");
    pnum->add_option("--format", pnum_format, "csv | json");

    // ---- sweep ----
    auto* sweep_cmd = app.add_subcommand("sweep", "figure-style parameter sweeps");
    sweep_cmd->set_config("--config");
    StateOptions sweep_state;
    LossOptions sweep_loss;
    std::string sweep_quantity = "mean_var";
    std::string axis1, axis2;
    int sweep_nmax = -1;
    std::string sweep_out, sweep_format = "csv";
    add_state_options(sweep_cmd, sweep_state);
    add_loss_options(sweep_cmd, sweep_loss);
    sweep_cmd->add_option("--quantity", sweep_quantity,
                          "pn | mean_var | g2grid | g2zero | quad_depth | fidelity");
    sweep_cmd->add_option("--axis1", axis1, "first axis as name:lo:hi:step")->required();
    sweep_cmd->add_option("--axis2", axis2, "optional second axis");
    sweep_cmd->add_option("--nmax", sweep_nmax, "pn quantity: truncate at this photon number");
    sweep_cmd->add_option("--output", sweep_out, "output path (default stdout)");
    sweep_cmd->add_option("--format", sweep_format, "csv | json");

    // ---- g2grid ----
    auto* g2_cmd = app.add_subcommand("g2grid", "two-time correlation grid");
    g2_cmd->set_config("--config");
    StateOptions g2_state;
    LossOptions g2_loss;
    double tmin = -5.0, tmax = 8.0;
    int resolution = 201;
    std::string g2_out, g2_format = "csv";
    add_state_options(g2_cmd, g2_state);
    add_loss_options(g2_cmd, g2_loss);
    g2_cmd->add_option("--tmin", tmin, "grid start (units 1/Omega)");
    g2_cmd->add_option("--tmax", tmax, "grid end");
    g2_cmd->add_option("--resolution", resolution, "points per axis");
    g2_cmd->add_option("--output", g2_out, "output path (default stdout)");
    g2_cmd->add_option("--format", g2_format, "csv | json");

    // ---- quad ----
    auto* quad_cmd = app.add_subcommand("quad", "windowed quadrature mean and variance");
    quad_cmd->set_config("--config");
    StateOptions quad_state;
    LossOptions quad_loss;
    std::string phase_name = "theta";
    std::vector<double> window_spec;
    std::string quad_out;
    add_state_options(quad_cmd, quad_state);
    add_loss_options(quad_cmd, quad_loss);
    quad_cmd->add_option("--phase", phase_name, "theta | theta+pi/2 | constant offset (rad)");
    quad_cmd->add_option("--window", window_spec, "window as START DURATION")->expected(0, 2);
    quad_cmd->add_option("--output", quad_out, "output path (default stdout)");

    // ---- fidelity ----
    auto* fid_cmd = app.add_subcommand("fidelity", "fidelity against the ideal state");
    fid_cmd->set_config("--config");
    StateOptions fid_state;
    LossOptions fid_loss;
    std::string fid_out;
    add_state_options(fid_cmd, fid_state);
    add_loss_options(fid_cmd, fid_loss);
    fid_cmd->add_option("--output", fid_out, "output path (default stdout)");

    // ---- oracle ----
    auto* oracle_cmd = app.add_subcommand("oracle", "closed-form vs quadrature verification");
    oracle_cmd->set_config("--config");
    double tolerance = 1e-6;
    std::string report_path;
    bool quick = false;
    std::string oracle_out;
    oracle_cmd->add_option("--tolerance", tolerance, "relative tolerance (default 1e-6)");
    oracle_cmd->add_option("--report", report_path, "write the JSON report here");
    oracle_cmd->add_flag("--quick", quick, "reduced grid for smoke checks");
    oracle_cmd->add_option("--output", oracle_out, "summary output (default stdout)");

    // ---- presets ----
    auto* presets_cmd = app.add_subcommand("presets", "loss channel table / eta(L) curves");
    presets_cmd->set_config("--config");
    LossOptions presets_loss;
    bool table_mode = false;
    double lmax = 5.0;
    int steps = 200;
    std::string presets_out, presets_format = "csv";
    presets_cmd->add_option("--channels", presets_loss.channels_file,
                            "channel table file (key=value)");
    presets_cmd->add_flag("--table", table_mode, "emit eta(L) rows instead of the channel list");
    presets_cmd->add_option("--lmax", lmax, "largest length for --table (um)");
    presets_cmd->add_option("--steps", steps, "rows per channel for --table");
    presets_cmd->add_option("--output", presets_out, "output path (default stdout)");
    presets_cmd->add_option("--format", presets_format, "csv | json");

    CLI11_PARSE(app, argc, argv);

    try {
        if (app.got_subcommand(pnum)) {
            return run_pnum(pnum_state, pnum_loss, pnum_kind, pnum_m, pnum_etas, pnum_nmax,
                            pnum_out, pnum_format);
        }
        if (app.got_subcommand(sweep_cmd)) {
            SweepSpec spec;
            spec.quantity = parse_quantity(sweep_quantity);
            spec.axes.push_back(parse_axis(axis1));
            if (!axis2.empty()) spec.axes.push_back(parse_axis(axis2));
            spec.base = sweep_state.spec();
            warn_narrowband(spec.base);
            spec.nmax = sweep_nmax;
            if (!sweep_loss.preset.empty()) {
                spec.channel = find_channel(sweep_loss.channels(), sweep_loss.preset);
                spec.length = sweep_loss.length;
            }
            spec.eta = sweep_loss.eta;
            emit(run_sweep(spec), sweep_out, sweep_format);
            return 0;
        }
        if (app.got_subcommand(g2_cmd)) {
            const PacStateSpec spec = g2_state.spec();
            warn_narrowband(spec);
            std::optional<EtaResult> eta;
            if (!g2_loss.preset.empty() || g2_loss.eta < 1.0) eta = g2_loss.resolve();
            const CorrelationGrid grid = g2_grid(spec, {tmin, tmax, resolution}, eta);
            write_text(g2_out, g2_format == "json" ? grid_to_json(grid) : grid_to_csv(grid));
            return 0;
        }
        if (app.got_subcommand(quad_cmd)) {
            return run_quad(quad_state, quad_loss, phase_name, window_spec, quad_out);
        }
        if (app.got_subcommand(fid_cmd)) {
            return run_fidelity(fid_state, fid_loss, fid_out);
        }
        if (app.got_subcommand(oracle_cmd)) {
            return run_oracle(tolerance, report_path, quick, oracle_out);
        }
        if (app.got_subcommand(presets_cmd)) {
            return run_presets(presets_loss, table_mode, lmax, steps, presets_out,
                               presets_format);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
