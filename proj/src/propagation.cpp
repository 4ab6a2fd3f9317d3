#include "pacsim/propagation.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

namespace pacsim {

EtaResult eta_of_length(const LossChannel& channel, double length) {
    if (channel.k_i < 0.0) throw ParameterError("eta_of_length: k_i must be >= 0");
    if (!(channel.v_g > 0.0)) throw ParameterError("eta_of_length: v_g must be > 0");
    if (length < 0.0) throw ParameterError("eta_of_length: length must be >= 0");
    EtaResult r;
    r.magnitude = std::exp(-channel.k_i * length);
    r.phase = 2.0 * (channel.k_r * length - channel.omega0 * length / channel.v_g);
    r.retarded_shift = length / channel.v_g;
    return r;
}

double length_for_eta(const LossChannel& channel, double target_eta) {
    if (target_eta < 0.0 || target_eta > 1.0) {
        throw ParameterError("length_for_eta: target eta must lie in (0, 1]");
    }
    if (target_eta == 0.0) {
        throw InfiniteLengthError("length_for_eta: eta = 0 needs an infinite length");
    }
    if (target_eta == 1.0) return 0.0;
    if (channel.k_i == 0.0) {
        throw NoLossError("length_for_eta: channel '" + channel.label +
                          "' has k_i = 0, eta stays 1 at any length");
    }
    return -std::log(target_eta) / channel.k_i;
}

std::vector<LossChannel> presets() {
    return {
        {"nanowire", 1.0 / 1.2, 0.0, 1.0, 0.0},
        {"stripe", 1.0 / 15.0, 0.0, 1.0, 0.0},
        {"fibre", 1.0 / 1.0e10, 0.0, 1.0, 0.0},
    };
}

LossChannel find_channel(const std::vector<LossChannel>& channels, const std::string& label) {
    const auto it = std::find_if(channels.begin(), channels.end(),
                                 [&](const LossChannel& c) { return c.label == label; });
    if (it == channels.end()) {
        throw ParameterError("find_channel: unknown channel '" + label + "'");
    }
    return *it;
}

namespace {

void commit(std::vector<LossChannel>& out, LossChannel& pending, bool& open) {
    if (!open) return;
    if (pending.k_i < 0.0 || !(pending.v_g > 0.0)) {
        throw ParameterError("load_channels: channel '" + pending.label +
                             "' needs k_i >= 0 and v_g > 0");
    }
    const auto it = std::find_if(out.begin(), out.end(), [&](const LossChannel& c) {
        return c.label == pending.label;
    });
    if (it != out.end()) {
        *it = pending;
    } else {
        out.push_back(pending);
    }
    pending = LossChannel{};
    open = false;
}

}  // namespace

std::vector<LossChannel> load_channels(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParameterError("load_channels: cannot open '" + path + "'");
    std::vector<LossChannel> out = presets();
    LossChannel pending;
    bool open = false;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        const auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            const auto b = s.find_first_not_of(" \t\r");
            const auto e = s.find_last_not_of(" \t\r");
            return b == std::string::npos ? std::string{} : s.substr(b, e - b + 1);
        };
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) continue;
        if (key == "label") {
            commit(out, pending, open);
            pending.label = value;
            open = true;
            continue;
        }
        if (!open) {
            throw ParameterError("load_channels: '" + path + "' line " + std::to_string(lineno) +
                                 ": key '" + key + "' before any label");
        }
        try {
            if (key == "k_i") {
                pending.k_i = std::stod(value);
            } else if (key == "k_r") {
                pending.k_r = std::stod(value);
            } else if (key == "v_g") {
                pending.v_g = std::stod(value);
            } else if (key == "omega0") {
                pending.omega0 = std::stod(value);
            } else {
                throw ParameterError("load_channels: unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw ParameterError("load_channels: '" + path + "' line " + std::to_string(lineno) +
                                 ": bad number '" + value + "'");
        }
    }
    commit(out, pending, open);
    return out;
}

}  // namespace pacsim
