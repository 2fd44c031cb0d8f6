#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace beamplan {

inline constexpr double kBoltzmannJK = 1.380649e-23;
inline constexpr double kSpeedOfLightMS = 299792458.0;

struct NoFeasibleModcod : std::runtime_error {
    explicit NoFeasibleModcod(const std::string& what) : std::runtime_error(what) {}
};
struct InfeasibleBeam : std::runtime_error {
    explicit InfeasibleBeam(const std::string& what) : std::runtime_error(what) {}
};

struct Modcod {
    std::string name;
    double spectral_efficiency = 0.0;  // bps/Hz
    double ebn0_db = 0.0;
};

// Rows sorted by strictly increasing spectral efficiency.
struct ModcodTable {
    std::vector<Modcod> rows;

    bool empty() const { return rows.empty(); }
    double min_gamma() const { return rows.front().spectral_efficiency; }
    double max_gamma() const { return rows.back().spectral_efficiency; }
};

// DVB-S2 ladder, QPSK 1/4 through 32APSK 9/10 (EN 302 307 ideal Es/N0
// converted to Eb/N0).
ModcodTable default_modcod_table();

// 3-row synthetic table used throughout the unit tests.
ModcodTable test_modcod_table();

// CSV rows: name,gamma,ebn0_db (header line optional).
ModcodTable load_modcod_csv(const std::string& path);

struct LinkParams {
    double roll_off = 0.2;
    double obo_db = 2.0;
    double tx_gain_db = 45.0;
    double rx_gain_db = 40.0;
    double system_temp_k = 300.0;
    double boltzmann_jk = kBoltzmannJK;
    double slant_range_m = 8062000.0;
    double carrier_freq_hz = 19.7e9;
};

// Power per admissible channel count; index 0 corresponds to b_lo.
struct PowerTable {
    int beam_id = -1;
    int b_lo = 1;
    std::vector<double> watts;

    int b_hi() const { return b_lo + static_cast<int>(watts.size()) - 1; }
    double at(int b) const { return watts[static_cast<std::size_t>(b - b_lo)]; }
    bool covers(int b) const { return b >= b_lo && b <= b_hi(); }
};

// Lower bound of the required spectral efficiency for a demand spread over
// b channels: D * (1 + roll_off) / (b * BW).
double required_spectral_efficiency(double demand_bps, double roll_off, int b, double bw_hz);

// The row with minimal spectral efficiency among rows satisfying gamma >= gamma_req.
const Modcod& select_modcod(double gamma_req, const ModcodTable& table);

double fspl_db(double range_m, double freq_hz);

// Transmit power (Watts) for serving the demand over b channels:
// C/N0(dB) + OBO - G_Tx - G_Rx + FSPL + 10 log10(k * T_sys), converted to linear.
double required_power(double demand_bps, int b, double bw_hz, const LinkParams& link,
                      const ModcodTable& table);

// Smallest feasible b (modcod exists and power fits under p_beam_max_w) and the
// largest b at which extra channels still relax the modcod requirement.
std::pair<int, int> compute_b_range(double demand_bps, double bw_hz, const LinkParams& link,
                                    const ModcodTable& table, int n_channels,
                                    double p_beam_max_w);

PowerTable build_power_table(int beam_id, double demand_bps, double bw_hz,
                             const LinkParams& link, const ModcodTable& table, int b_min,
                             int b_max);

}  // namespace beamplan
