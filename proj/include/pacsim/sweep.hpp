#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pacsim/correlations.hpp"
#include "pacsim/io.hpp"
#include "pacsim/propagation.hpp"

namespace pacsim {

enum class SweepQuantity { Pn, MeanVar, G2Grid, G2Zero, QuadDepth, Fidelity };

SweepQuantity parse_quantity(const std::string& name);

/// One sweep axis: name in {tau, omega1, n_alpha, eta, L} (or {t1} for
/// g2grid, where the same axis is used for both times). Values run lo,
/// lo+step, ... up to hi inclusive.
struct AxisSpec {
    std::string name;
    double lo = 0.0;
    double hi = 0.0;
    double step = 1.0;

    std::vector<double> values() const;
};

AxisSpec parse_axis(const std::string& text);  // "name:lo:hi:step"

/// A figure-style sweep: a quantity evaluated over up to two axes around a
/// fixed base point, optionally through a loss channel.
struct SweepSpec {
    SweepQuantity quantity = SweepQuantity::MeanVar;
    std::vector<AxisSpec> axes;
    PacStateSpec base{3.0, 1.0, 1.0, 0.0, 100.0};
    double eta = 1.0;
    std::optional<LossChannel> channel;
    double length = 0.0;
    int nmax = -1;  // pn only; -1 keeps the distribution's own truncation
};

/// Evaluates the sweep into a plot-ready table. Rows are emitted axis1-major
/// and points are evaluated in a parallel pool with deterministic ordering.
Table run_sweep(const SweepSpec& spec);

}  // namespace pacsim
