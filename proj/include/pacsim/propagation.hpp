#pragma once

#include <string>
#include <vector>

#include "pacsim/errors.hpp"

namespace pacsim {

/// Waveguide propagation descriptor. Lengths are in micrometres throughout;
/// k_i and k_r are wavenumbers at the carrier frequency in 1/um, v_g the
/// group velocity in um per time unit. Defaults make the eta phase zero and
/// the retarded shift equal to L.
struct LossChannel {
    std::string label;
    double k_i = 0.0;
    double k_r = 0.0;
    double v_g = 1.0;
    double omega0 = 0.0;
};

/// Loss factor after propagating a length L:
/// |eta| = exp(-k_i L), phase 2 [k_r L - omega0 L / v_g], shift L / v_g.
struct EtaResult {
    double magnitude = 1.0;
    double phase = 0.0;
    double retarded_shift = 0.0;
};

EtaResult eta_of_length(const LossChannel& channel, double length);

/// Inverse of eta_of_length: L = -ln(eta) / k_i.
/// Throws InfiniteLengthError for eta = 0 and NoLossError for k_i = 0.
double length_for_eta(const LossChannel& channel, double target_eta);

/// The three example waveguides: plasmonic nanowire (k_i = 1/1.2 um^-1),
/// plasmonic stripe (1/15 um^-1) and dielectric fibre (1e-10 um^-1).
std::vector<LossChannel> presets();

/// Look up a preset (or config-loaded channel) by label.
LossChannel find_channel(const std::vector<LossChannel>& channels, const std::string& label);

/// Parse a key-value channel table. Format, one channel per block:
///   label = nanowire
///   k_i = 0.8333
///   k_r = 0     (optional)
///   v_g = 1     (optional)
/// Blank lines and lines starting with '#' are ignored; a new `label` key
/// starts the next channel. Channels with a label matching a preset replace
/// that preset; new labels are appended.
std::vector<LossChannel> load_channels(const std::string& path);

}  // namespace pacsim
