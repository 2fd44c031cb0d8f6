#include "beamplan/linkbudget.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

namespace beamplan {

ModcodTable default_modcod_table() {
    return ModcodTable{{
        {"QPSK 1/4", 0.490243, 0.75},
        {"QPSK 2/5", 0.789412, 0.73},
        {"QPSK 1/2", 0.988858, 1.05},
        {"QPSK 3/4", 1.487473, 2.31},
        {"QPSK 8/9", 1.766451, 3.73},
        {"8PSK 3/4", 2.228124, 4.43},
        {"8PSK 9/10", 2.679207, 6.70},
        {"16APSK 3/4", 2.966728, 5.49},
        {"16APSK 5/6", 3.300184, 5.84},
        {"16APSK 8/9", 3.523143, 7.42},
        {"32APSK 4/5", 3.951571, 7.67},
        {"32APSK 9/10", 4.453027, 9.56},
    }};
}

ModcodTable test_modcod_table() {
    return ModcodTable{{
        {"T-LOW", 0.5, 0.0},
        {"T-MID", 1.0, 3.0},
        {"T-HIGH", 2.0, 7.0},
    }};
}

ModcodTable load_modcod_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open modcod csv: " + path);
    ModcodTable table;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::stringstream ss(line);
        std::string name, gamma_s, ebn0_s;
        if (!std::getline(ss, name, ',')) continue;
        if (!std::getline(ss, gamma_s, ',')) continue;
        if (!std::getline(ss, ebn0_s)) continue;
        try {
            table.rows.push_back({name, std::stod(gamma_s), std::stod(ebn0_s)});
        } catch (const std::invalid_argument&) {
            if (table.rows.empty()) continue;  // header line
            throw std::runtime_error("bad modcod csv row: " + line);
        }
    }
    for (std::size_t i = 1; i < table.rows.size(); ++i) {
        if (table.rows[i].spectral_efficiency <= table.rows[i - 1].spectral_efficiency) {
            throw std::runtime_error("modcod rows must have strictly increasing gamma");
        }
    }
    if (table.empty()) throw std::runtime_error("empty modcod table: " + path);
    return table;
}

double required_spectral_efficiency(double demand_bps, double roll_off, int b, double bw_hz) {
    return demand_bps * (1.0 + roll_off) / (b * bw_hz);
}

const Modcod& select_modcod(double gamma_req, const ModcodTable& table) {
    for (const auto& row : table.rows) {
        if (row.spectral_efficiency >= gamma_req) return row;
    }
    throw NoFeasibleModcod("no modcod with gamma >= " + std::to_string(gamma_req));
}

double fspl_db(double range_m, double freq_hz) {
    return 20.0 * std::log10(4.0 * std::numbers::pi * range_m * freq_hz / kSpeedOfLightMS);
}

double required_power(double demand_bps, int b, double bw_hz, const LinkParams& link,
                      const ModcodTable& table) {
    double gamma_req = required_spectral_efficiency(demand_bps, link.roll_off, b, bw_hz);
    const Modcod& mc = select_modcod(gamma_req, table);
    double cn0_db = mc.ebn0_db + 10.0 * std::log10(demand_bps / (b * bw_hz));
    double p_dbw = cn0_db + link.obo_db - link.tx_gain_db - link.rx_gain_db +
                   fspl_db(link.slant_range_m, link.carrier_freq_hz) +
                   10.0 * std::log10(link.boltzmann_jk * link.system_temp_k);
    return std::pow(10.0, p_dbw / 10.0);
}

std::pair<int, int> compute_b_range(double demand_bps, double bw_hz, const LinkParams& link,
                                    const ModcodTable& table, int n_channels,
                                    double p_beam_max_w) {
    int b_min = 0;
    for (int b = 1; b <= n_channels; ++b) {
        double gamma_req = required_spectral_efficiency(demand_bps, link.roll_off, b, bw_hz);
        if (gamma_req > table.max_gamma()) continue;
        if (required_power(demand_bps, b, bw_hz, link, table) > p_beam_max_w) continue;
        b_min = b;
        break;
    }
    if (b_min == 0) {
        throw InfeasibleBeam("no channel count in [1," + std::to_string(n_channels) +
                             "] can serve " + std::to_string(demand_bps) + " bps");
    }
    // Largest b at which extra channels still lower the modcod requirement;
    // past it the lowest-gamma row is already selected and channels are waste.
    int b_max = b_min;
    for (int b = b_min; b <= n_channels; ++b) {
        if (required_spectral_efficiency(demand_bps, link.roll_off, b, bw_hz) >=
            table.min_gamma()) {
            b_max = b;
        } else {
            break;
        }
    }
    return {b_min, b_max};
}

PowerTable build_power_table(int beam_id, double demand_bps, double bw_hz,
                             const LinkParams& link, const ModcodTable& table, int b_min,
                             int b_max) {
    PowerTable pt;
    pt.beam_id = beam_id;
    pt.b_lo = b_min;
    pt.watts.reserve(static_cast<std::size_t>(b_max - b_min + 1));
    for (int b = b_min; b <= b_max; ++b) {
        pt.watts.push_back(required_power(demand_bps, b, bw_hz, link, table));
    }
    return pt;
}

}  // namespace beamplan
