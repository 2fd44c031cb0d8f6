#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "beamplan/geo.hpp"
#include "beamplan/geometry.hpp"
#include "beamplan/linkbudget.hpp"

namespace beamplan {

// Frequency grid: N_r * N_p groups (rows) by N_ch channels (columns).
// Channel, group, and polarization indices are 1-based.
struct GridConfig {
    int n_channels = 80;
    int n_reuses = 8;
    int n_polarizations = 2;
    double channel_bandwidth_hz = 25e6;

    int n_groups() const { return n_reuses * n_polarizations; }
};

enum class UserKind { fixed, aeronautical, maritime, land_mobile };

std::string to_string(UserKind k);
UserKind user_kind_from_string(const std::string& s);

struct UncertaintySpec {
    double max_delay_s = 0.0;
    std::vector<Trajectory> alt_trajectories;
    std::optional<std::vector<Geodetic>> operational_area;  // polygon vertices

    bool position_uncertain() const {
        return !alt_trajectories.empty() || operational_area.has_value();
    }
};

struct User {
    int id = -1;
    UserKind kind = UserKind::fixed;
    double demand_bps = 0.0;
    double t_start = 0.0;
    double t_end = 0.0;
    Trajectory trajectory;
    bool known_a_priori = true;  // membership in U_info
    UncertaintySpec uncertainty;

    bool mobile() const { return kind != UserKind::fixed; }
};

struct Gateway {
    int id = -1;
    Geodetic position;
};

struct Beam {
    int id = -1;
    std::vector<int> user_ids;
    UserKind kind = UserKind::fixed;
    double t_start = 0.0;
    double t_end = 0.0;
    double demand_bps = 0.0;
    int b_min = 1;
    int b_max = 1;
    int gateway_id = -1;
    Trajectory trajectory;
    PowerTable power_table;
    double worst_slant_range_m = 0.0;
    // Position only loosely known before operations (drives S3 areas).
    bool position_uncertain = false;
    std::optional<std::vector<Geodetic>> operational_area;

    bool mobile() const { return kind != UserKind::fixed; }
    bool active_at(double t) const { return t >= t_start && t < t_end; }
    Geodetic position_at(double t) const { return trajectory.position_at(t); }
};

struct FrequencyAssignment {
    int beam_id = -1;
    int f = 1;  // first channel, 1-based
    int b = 1;  // allocated channels, reserved ones included
    int g = 1;  // reuse, 1-based
    int p = 1;  // polarization, 1-based
    int reserved_extra_channels = 0;            // S4 widening share of b
    std::vector<std::array<int, 3>> backup_slots;  // S5 (f,g,p) slots of b_min channels

    // Channels actually transmitted on; power lookups use this.
    int b_used() const { return b - reserved_extra_channels; }
    int f_end() const { return f + b - 1; }  // last occupied channel

    friend bool operator==(const FrequencyAssignment&, const FrequencyAssignment&) = default;
};

// One piece of a beam's plan; no assignment means DEACTIVATED.
struct PlanPiece {
    double t_from = 0.0;
    double t_to = 0.0;
    std::optional<FrequencyAssignment> assignment;

    bool deactivated() const { return !assignment.has_value(); }
};

struct FrequencyPlan {
    std::map<int, std::vector<PlanPiece>> assignments;  // beam_id -> pieces

    const PlanPiece* piece_at(int beam_id, double t) const;
};

struct DelayEvent {
    int user_id = -1;
    double delay_s = 0.0;
};
struct TrajectoryChangeEvent {
    int user_id = -1;
    Trajectory new_trajectory;
};
struct NewUserEvent {
    User user;
};

struct Event {
    double t_reveal = 0.0;
    std::variant<DelayEvent, TrajectoryChangeEvent, NewUserEvent> payload;

    int user_id() const;
};

// Actual window + path of a user once all its events have taken effect.
struct RealizedUser {
    int user_id = -1;
    double t_start = 0.0;
    double t_end = 0.0;
    Trajectory trajectory;
};

struct Truth {
    std::vector<RealizedUser> realized;
    std::vector<Event> events;
};

struct ScenarioLink {
    LinkParams params;        // slant_range_m is a placeholder, set per beam
    double p_beam_max_w = 1000.0;
    double p_sat_w = 50.0;
};

struct Scenario {
    GridConfig grid;
    Constellation constellation;
    std::vector<Gateway> gateways;
    ScenarioLink link;
    ModcodTable modcods;
    double horizon_s = 86400.0;
    double dt_s = 60.0;
    std::uint64_t seed = 0;
    std::vector<User> users;
    Truth truth;

    const User* find_user(int id) const;
    std::vector<const User*> info_users() const;  // U_info
};

// Every invariant violation in the scenario, as human-readable strings.
// An empty result means the scenario is valid.
std::vector<std::string> validate_scenario(const Scenario& scenario);

// Beam-level invariant violations (beams are derived data, checked separately).
std::vector<std::string> validate_beams(const std::vector<Beam>& beams, const GridConfig& grid);

}  // namespace beamplan
