#include "pacsim/fidelity.hpp"

#include <cmath>

namespace pacsim {

FidelityResult fidelity(const PacStateSpec& spec) {
    if (spec.n_alpha <= 0.0) {
        throw UndefinedReferenceError(
            "fidelity: the ideal PAC reference needs n_alpha > 0 (profile alpha/sqrt(n_alpha))");
    }
    const OverlapState ov = overlap_state(spec);
    FidelityResult r;
    r.sigma_abs2 = ov.sigma_abs2;
    r.norm = ov.norm;
    r.n_alpha = spec.n_alpha;
    r.eta = 1.0;
    r.value = ov.sigma_abs2 * (1.0 + spec.n_alpha) / (spec.n_alpha * (1.0 + ov.sigma_abs2));
    return r;
}

FidelityResult fidelity_lossy(const PacStateSpec& spec, double eta) {
    if (eta < 0.0 || eta > 1.0) throw ParameterError("fidelity_lossy: eta must lie in [0, 1]");
    if (spec.n_alpha <= 0.0) {
        throw UndefinedReferenceError(
            "fidelity_lossy: the ideal PAC reference needs n_alpha > 0");
    }
    if (eta == 1.0) return fidelity(spec);
    const OverlapState ov = overlap_state(spec);
    FidelityResult r;
    r.sigma_abs2 = ov.sigma_abs2;
    r.norm = ov.norm;
    r.n_alpha = spec.n_alpha;
    r.eta = eta;
    if (eta == 0.0) {
        // Complete loss leaves the vacuum, orthogonal to any PAC state.
        r.value = 0.0;
        return r;
    }
    const double root = std::sqrt(eta);
    const double amp = 1.0 + root * spec.n_alpha;
    r.value = eta * std::exp(-2.0 * spec.n_alpha * (1.0 - root)) * ov.norm /
              (1.0 + spec.n_alpha) * ov.sigma_abs2 / spec.n_alpha * amp * amp;
    return r;
}

}  // namespace pacsim
