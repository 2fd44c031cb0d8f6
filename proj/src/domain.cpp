#include "beamplan/domain.hpp"

#include <stdexcept>

namespace beamplan {

std::string to_string(UserKind k) {
    switch (k) {
        case UserKind::fixed: return "fixed";
        case UserKind::aeronautical: return "aeronautical";
        case UserKind::maritime: return "maritime";
        case UserKind::land_mobile: return "land_mobile";
    }
    return "unknown";
}

UserKind user_kind_from_string(const std::string& s) {
    if (s == "fixed") return UserKind::fixed;
    if (s == "aeronautical") return UserKind::aeronautical;
    if (s == "maritime") return UserKind::maritime;
    if (s == "land_mobile") return UserKind::land_mobile;
    throw std::runtime_error("unknown user kind: " + s);
}

const PlanPiece* FrequencyPlan::piece_at(int beam_id, double t) const {
    auto it = assignments.find(beam_id);
    if (it == assignments.end()) return nullptr;
    for (const auto& piece : it->second) {
        if (t >= piece.t_from && t < piece.t_to) return &piece;
    }
    return nullptr;
}

int Event::user_id() const {
    if (const auto* d = std::get_if<DelayEvent>(&payload)) return d->user_id;
    if (const auto* c = std::get_if<TrajectoryChangeEvent>(&payload)) return c->user_id;
    return std::get<NewUserEvent>(payload).user.id;
}

const User* Scenario::find_user(int id) const {
    for (const auto& u : users) {
        if (u.id == id) return &u;
    }
    return nullptr;
}

std::vector<const User*> Scenario::info_users() const {
    std::vector<const User*> out;
    for (const auto& u : users) {
        if (u.known_a_priori) out.push_back(&u);
    }
    return out;
}

namespace {

void check_user(const User& u, double horizon, std::vector<std::string>& out) {
    std::string tag = "user " + std::to_string(u.id) + ": ";
    if (u.demand_bps <= 0.0) out.push_back(tag + "demand must be positive");
    if (u.t_start >= u.t_end) out.push_back(tag + "empty service window");
    if (u.trajectory.empty()) {
        out.push_back(tag + "missing trajectory");
        return;
    }
    if (u.kind == UserKind::fixed) {
        if (u.t_start != 0.0 || u.t_end != horizon) {
            out.push_back(tag + "fixed users must span the whole horizon");
        }
        if (u.trajectory.samples.size() != 1) {
            out.push_back(tag + "fixed users must have a single static position");
        }
    }
    for (std::size_t i = 1; i < u.trajectory.samples.size(); ++i) {
        if (u.trajectory.samples[i].t <= u.trajectory.samples[i - 1].t) {
            out.push_back(tag + "trajectory timestamps must be strictly increasing");
            break;
        }
    }
    if (u.uncertainty.max_delay_s < 0.0) out.push_back(tag + "max_delay_s must be >= 0");
}

}  // namespace

std::vector<std::string> validate_scenario(const Scenario& scenario) {
    std::vector<std::string> out;
    if (scenario.grid.n_channels < 1 || scenario.grid.n_reuses < 1 ||
        scenario.grid.n_polarizations < 1) {
        out.push_back("grid: all counts must be >= 1");
    }
    if (scenario.grid.channel_bandwidth_hz <= 0.0) {
        out.push_back("grid: channel bandwidth must be positive");
    }
    if (scenario.constellation.n_satellites < 1) {
        out.push_back("constellation: needs at least one satellite");
    }
    if (scenario.constellation.altitude_m <= 0.0) {
        out.push_back("constellation: altitude must be positive");
    }
    if (scenario.horizon_s <= 0.0) out.push_back("horizon must be positive");
    if (scenario.dt_s <= 0.0) out.push_back("dt must be positive");

    std::vector<int> seen;
    for (const auto& u : scenario.users) {
        for (int id : seen) {
            if (id == u.id) {
                out.push_back("duplicate user id " + std::to_string(u.id));
                break;
            }
        }
        seen.push_back(u.id);
        check_user(u, scenario.horizon_s, out);
    }
    for (const auto& ev : scenario.truth.events) {
        if (const auto* nu = std::get_if<NewUserEvent>(&ev.payload)) {
            if (ev.t_reveal > nu->user.t_start) {
                out.push_back("event for user " + std::to_string(nu->user.id) +
                              " revealed after it takes effect");
            }
        } else if (const User* u = scenario.find_user(ev.user_id())) {
            if (ev.t_reveal > u->t_start) {
                out.push_back("event for user " + std::to_string(u->id) +
                              " revealed after it takes effect");
            }
        } else {
            out.push_back("event references unknown user " + std::to_string(ev.user_id()));
        }
    }
    return out;
}

std::vector<std::string> validate_beams(const std::vector<Beam>& beams, const GridConfig& grid) {
    std::vector<std::string> out;
    for (const auto& b : beams) {
        std::string tag = "beam " + std::to_string(b.id) + ": ";
        if (b.b_min < 1) out.push_back(tag + "b_min must be >= 1");
        if (b.b_min > b.b_max) out.push_back(tag + "b_min>b_max");
        if (b.b_max > grid.n_channels) out.push_back(tag + "b_max exceeds channel count");
        if (b.t_start >= b.t_end) out.push_back(tag + "empty service window");
        if (b.demand_bps <= 0.0) out.push_back(tag + "demand must be positive");
        if (b.mobile() && b.user_ids.size() != 1) {
            out.push_back(tag + "mobile beams carry exactly one user");
        }
        if (b.user_ids.empty()) out.push_back(tag + "beam without users");
        if (!b.power_table.watts.empty() &&
            (b.power_table.b_lo != b.b_min || b.power_table.b_hi() != b.b_max)) {
            out.push_back(tag + "power table does not cover [b_min, b_max]");
        }
    }
    return out;
}

}  // namespace beamplan
