#pragma once

#include "pacsim/pulses.hpp"

namespace pacsim {

/// Squared overlap with the ideal PAC state (photon profile alpha/sqrt(n_a)
/// with zero offset).
struct FidelityResult {
    double value = 0.0;
    double eta = 1.0;
    double sigma_abs2 = 0.0;
    double norm = 1.0;
    double n_alpha = 0.0;
};

/// F = |sigma|^2 (1 + n_alpha) / (n_alpha (1 + |sigma|^2)).
/// Throws UndefinedReferenceError for n_alpha = 0 (no ideal reference pulse).
FidelityResult fidelity(const PacStateSpec& spec);

/// Fidelity after propagation with loss |eta|, reference state held fixed
/// and time-shifted by the propagation delay:
/// F' = eta e^(-2 n_a (1 - sqrt(eta))) |N|/(1+n_a) |sigma|^2/n_a
///      (1 + sqrt(eta) n_a)^2.
/// eta = 1 reduces to the lossless value; eta = 0 returns 0.
FidelityResult fidelity_lossy(const PacStateSpec& spec, double eta);

}  // namespace pacsim
