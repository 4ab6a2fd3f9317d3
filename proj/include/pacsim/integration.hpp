#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "pacsim/errors.hpp"

namespace pacsim {

/// Controls for the adaptive quadrature engine.
struct IntegrationConfig {
    /// Half-width of the default integration window, in units of the widest
    /// pulse width involved. Gaussian tails at 10 widths are below 1e-40.
    double window_halfwidths = 10.0;
    double relative_tolerance = 1e-10;
    int max_subdivisions = 2000;
};

struct IntegrationResult {
    double value = 0.0;
    double error_bound = 0.0;
    int subdivisions = 0;
};

struct ComplexIntegrationResult {
    std::complex<double> value{0.0, 0.0};
    double error_bound = 0.0;
    int subdivisions = 0;
};

/// Adaptive Gauss-Kronrod 15(7) on [a, b]. Globally refines the segment with
/// the largest error estimate until the total estimate drops below
/// relative_tolerance * |integral| (or an absolute floor for near-zero
/// integrals). Deterministic for identical inputs. Throws ConvergenceError
/// carrying the best estimate when max_subdivisions is exhausted.
IntegrationResult integrate(const std::function<double(double)>& f, double a, double b,
                            const IntegrationConfig& config = {});

ComplexIntegrationResult integrate_complex(const std::function<std::complex<double>(double)>& f,
                                           double a, double b,
                                           const IntegrationConfig& config = {});

/// Trapezoidal rule over uniformly sampled values with spacing dt.
double integrate_samples(const std::vector<double>& values, double dt);
std::complex<double> integrate_samples(const std::vector<std::complex<double>>& values, double dt);

/// A localized region of integration, described by a center and a width
/// scale (one pulse width). Used to build panel grids whose resolution
/// follows the pulses.
struct SupportRegion {
    double center = 0.0;
    double width = 1.0;
};

/// Fixed tensor-product quadrature grid: Gauss-Legendre panels covering the
/// union of the given support regions out to `span` widths, with panels no
/// wider than half a width inside each region. The same 1-D grid is reused
/// on every axis of a multi-dimensional integral.
struct PanelGrid {
    std::vector<double> nodes;
    std::vector<double> weights;

    std::size_t size() const { return nodes.size(); }
};

/// points_per_panel selects the embedded Gauss-Legendre rule: 10 or 15.
PanelGrid make_panel_grid(const std::vector<SupportRegion>& regions, int points_per_panel = 15,
                          double span = 8.0, int panels_per_region = 5);

/// Sum of w_i f(x_i) over the grid, in node order (deterministic).
double integrate_on_grid(const PanelGrid& grid, const std::function<double(double)>& f);
std::complex<double> integrate_on_grid_complex(
    const PanelGrid& grid, const std::function<std::complex<double>(double)>& f);

}  // namespace pacsim
