#pragma once

#include <numbers>

#include "pacsim/propagation.hpp"
#include "pacsim/pulses.hpp"

namespace pacsim {

/// Integration window [start, start + duration] of the time-integrated
/// quadrature operator X_phi(t, T).
struct QuadratureWindow {
    double start = -10.0;
    double duration = 20.0;

    double end() const { return start + duration; }
};

/// Quadrature phase phi(t) = omega0 t + offset, measured relative to the
/// pulse carrier. offset = 0 is the in-phase quadrature ("theta"), offset =
/// pi/2 the out-of-phase one. Arbitrary time dependence beyond a constant
/// offset is not supported.
struct PhaseChoice {
    double offset = 0.0;

    static PhaseChoice in_phase() { return {0.0}; }
    static PhaseChoice out_of_phase() { return {0.5 * std::numbers::pi}; }
};

/// Mean/variance of X_phi over a window, with the coherent-state baseline
/// T/4. squeezing_depth = variance - T/4; negative means squeezed.
struct QuadratureResult {
    double mean = 0.0;
    double variance = 0.0;
    double baseline = 0.0;
    double squeezing_depth = 0.0;
    double eta = 1.0;
};

/// Window covering both pulses: start = -10/min(omega, omega1) - |tau|,
/// duration = 20/min(omega, omega1) + 2|tau|.
QuadratureWindow default_window(const PacStateSpec& spec);

/// <X_phi(t,T)> = cos(offset) (|N||sigma| I_xi + I_alpha), with I the
/// windowed envelope integrals.
double pac_quadrature_mean(const PacStateSpec& spec, const QuadratureWindow& window,
                           PhaseChoice phase = {});

/// (dX_phi)^2 = T/4 + |N|(1/2 - |N||sigma|^2) cos^2(offset) I_xi^2
///            + (|N|/2) sin^2(offset) I_xi^2.
/// Squeezed (depth < 0) iff offset = 0 and |N||sigma|^2 > 1/2.
QuadratureResult pac_quadrature_variance(const PacStateSpec& spec, const QuadratureWindow& window,
                                         PhaseChoice phase = {});

/// Number state: mean 0, variance T/4 + (n/2) [window integral of |xi|]^2,
/// phase in-phase with the pulse carrier.
QuadratureResult fock_quadrature_variance(int n, const PulseProfile& profile,
                                          const QuadratureWindow& window);

/// Propagated quadrature: mean scales by |eta|^(1/2), variance relaxes
/// linearly to T/4. The window is interpreted as tracking the pulse (limits
/// internally shifted by the retarded time).
QuadratureResult lossy_quadrature(const PacStateSpec& spec, const QuadratureWindow& window,
                                  const EtaResult& eta, PhaseChoice phase = {});

/// Scans n_alpha over [lo, hi] in steps for the minimum in-phase variance at
/// perfect overlap (tau = 0, omega1 = omega). The grid must span at least
/// [0.5, 10]. Returns the minimizing n_alpha.
double optimal_nalpha_scan(double omega, double lo = 0.5, double hi = 10.0, double step = 0.01);

}  // namespace pacsim
