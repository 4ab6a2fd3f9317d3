#include "pacsim/sweep.hpp"

#include <cmath>

#include "pacsim/fidelity.hpp"
#include "pacsim/parallel.hpp"
#include "pacsim/photon_statistics.hpp"
#include "pacsim/quadratures.hpp"

namespace pacsim {

namespace {

const char* kUnits =
    "time in 1/Omega; bandwidth in Omega; length in um; probabilities dimensionless";

struct Point {
    PacStateSpec spec;
    double eta = 1.0;
    double shift = 0.0;
};

void apply_axis(Point& p, const SweepSpec& sweep, const std::string& name, double value) {
    if (name == "tau") {
        p.spec.tau = value;
    } else if (name == "omega1") {
        p.spec.omega1 = value;
    } else if (name == "n_alpha") {
        p.spec.n_alpha = value;
    } else if (name == "eta") {
        p.eta = value;
    } else if (name == "L") {
        if (!sweep.channel) {
            throw ParameterError("run_sweep: an L axis needs a loss channel preset");
        }
        const EtaResult e = eta_of_length(*sweep.channel, value);
        p.eta = e.magnitude;
        p.shift = e.retarded_shift;
    } else {
        throw ParameterError("run_sweep: unknown axis '" + name + "'");
    }
}

Point base_point(const SweepSpec& sweep) {
    Point p;
    p.spec = sweep.base;
    p.eta = sweep.eta;
    if (sweep.channel && sweep.length > 0.0) {
        const EtaResult e = eta_of_length(*sweep.channel, sweep.length);
        p.eta = e.magnitude;
        p.shift = e.retarded_shift;
    }
    return p;
}

Table g2grid_table(const SweepSpec& sweep) {
    if (sweep.axes.size() != 1) {
        throw ParameterError("run_sweep: g2grid takes exactly one time axis (t1)");
    }
    const AxisSpec& ax = sweep.axes.front();
    if (ax.name != "t1") throw ParameterError("run_sweep: the g2grid axis must be named t1");
    const auto values = ax.values();
    const Point p = base_point(sweep);
    GridBounds bounds{ax.lo, ax.hi, static_cast<int>(values.size())};
    std::optional<EtaResult> eta;
    if (p.shift > 0.0 || p.eta < 1.0) eta = EtaResult{p.eta, 0.0, p.shift};
    const CorrelationGrid grid = g2_grid(p.spec, bounds, eta);

    Table table;
    table.units = kUnits;
    table.columns = {"t1", "t2", "g2"};
    const std::size_t n = grid.t2_axis.size();
    table.rows.reserve(n * n);
    for (std::size_t i = 0; i < grid.t1_axis.size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            table.rows.push_back({grid.t1_axis[i], grid.t2_axis[j], grid.values[i * n + j]});
        }
    }
    return table;
}

}  // namespace

SweepQuantity parse_quantity(const std::string& name) {
    if (name == "pn") return SweepQuantity::Pn;
    if (name == "mean_var") return SweepQuantity::MeanVar;
    if (name == "g2grid") return SweepQuantity::G2Grid;
    if (name == "g2zero") return SweepQuantity::G2Zero;
    if (name == "quad_depth") return SweepQuantity::QuadDepth;
    if (name == "fidelity") return SweepQuantity::Fidelity;
    throw ParameterError("unknown sweep quantity '" + name +
                         "' (expected pn|mean_var|g2grid|g2zero|quad_depth|fidelity)");
}

std::vector<double> AxisSpec::values() const {
    if (!(step > 0.0)) throw ParameterError("axis '" + name + "': step must be > 0");
    if (hi < lo) throw ParameterError("axis '" + name + "': empty range");
    std::vector<double> v;
    const auto count = static_cast<long>(std::floor((hi - lo) / step + 1e-9));
    v.reserve(static_cast<std::size_t>(count) + 1);
    for (long i = 0; i <= count; ++i) v.push_back(lo + step * static_cast<double>(i));
    return v;
}

AxisSpec parse_axis(const std::string& text) {
    AxisSpec axis;
    std::string rest = text;
    std::vector<std::string> parts;
    std::size_t pos = 0;
    while ((pos = rest.find(':')) != std::string::npos) {
        parts.push_back(rest.substr(0, pos));
        rest.erase(0, pos + 1);
    }
    parts.push_back(rest);
    if (parts.size() != 4) {
        throw ParameterError("axis '" + text + "': expected name:lo:hi:step");
    }
    axis.name = parts[0];
    try {
        axis.lo = std::stod(parts[1]);
        axis.hi = std::stod(parts[2]);
        axis.step = std::stod(parts[3]);
    } catch (const std::exception&) {
        throw ParameterError("axis '" + text + "': bad number");
    }
    return axis;
}

Table run_sweep(const SweepSpec& sweep) {
    if (sweep.quantity == SweepQuantity::G2Grid) return g2grid_table(sweep);
    if (sweep.axes.empty() || sweep.axes.size() > 2) {
        throw ParameterError("run_sweep: need one or two axes");
    }

    const auto a1 = sweep.axes[0].values();
    const std::vector<double> a2 =
        sweep.axes.size() == 2 ? sweep.axes[1].values() : std::vector<double>{0.0};
    const bool two = sweep.axes.size() == 2;

    Table table;
    table.units = kUnits;
    table.columns = {sweep.axes[0].name};
    if (two) table.columns.push_back(sweep.axes[1].name);

    switch (sweep.quantity) {
        case SweepQuantity::Pn:
            table.columns.insert(table.columns.end(), {"n", "P_n", "mean", "variance"});
            break;
        case SweepQuantity::MeanVar:
            table.columns.insert(table.columns.end(), {"mean", "variance", "ratio"});
            break;
        case SweepQuantity::G2Zero:
            table.columns.push_back("g2zero");
            break;
        case SweepQuantity::QuadDepth:
            table.columns.insert(table.columns.end(), {"depth", "variance", "baseline"});
            break;
        case SweepQuantity::Fidelity:
            table.columns.push_back("fidelity");
            break;
        case SweepQuantity::G2Grid:
            break;
    }

    const std::size_t total = a1.size() * a2.size();
    std::vector<std::vector<std::vector<double>>> slots(total);
    parallel_for(total, [&](std::size_t idx) {
        const std::size_t i = idx / a2.size();
        const std::size_t j = idx % a2.size();
        Point p = base_point(sweep);
        apply_axis(p, sweep, sweep.axes[0].name, a1[i]);
        if (two) apply_axis(p, sweep, sweep.axes[1].name, a2[j]);

        std::vector<double> prefix = {a1[i]};
        if (two) prefix.push_back(a2[j]);
        auto& rows = slots[idx];

        switch (sweep.quantity) {
            case SweepQuantity::Pn: {
                PhotonDistribution d = pac_distribution(p.spec, p.eta);
                const int nmax = sweep.nmax >= 0 ? std::min(sweep.nmax, d.n_max()) : d.n_max();
                for (int n = 0; n <= nmax; ++n) {
                    auto row = prefix;
                    row.insert(row.end(), {static_cast<double>(n),
                                           d.probabilities[static_cast<std::size_t>(n)], d.mean,
                                           d.variance});
                    rows.push_back(std::move(row));
                }
                break;
            }
            case SweepQuantity::MeanVar: {
                const auto [mean, variance] = pac_mean_variance(p.spec, p.eta);
                auto row = prefix;
                row.insert(row.end(), {mean, variance, variance / mean});
                rows.push_back(std::move(row));
                break;
            }
            case SweepQuantity::G2Zero: {
                auto row = prefix;
                row.push_back(g2_zero(p.spec));
                rows.push_back(std::move(row));
                break;
            }
            case SweepQuantity::QuadDepth: {
                const QuadratureWindow window = default_window(p.spec);
                const QuadratureResult q =
                    lossy_quadrature(p.spec, window, EtaResult{p.eta, 0.0, p.shift});
                auto row = prefix;
                row.insert(row.end(), {q.squeezing_depth, q.variance, q.baseline});
                rows.push_back(std::move(row));
                break;
            }
            case SweepQuantity::Fidelity: {
                const FidelityResult f =
                    p.eta < 1.0 ? fidelity_lossy(p.spec, p.eta) : fidelity(p.spec);
                auto row = prefix;
                row.push_back(f.value);
                rows.push_back(std::move(row));
                break;
            }
            case SweepQuantity::G2Grid:
                break;
        }
    });

    for (auto& rows : slots) {
        for (auto& row : rows) table.rows.push_back(std::move(row));
    }
    return table;
}

}  // namespace pacsim
