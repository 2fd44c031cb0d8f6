#include "beamplan/geometry.hpp"

#include <limits>
#include <string>

namespace beamplan {

Vec3 satellite_position(const Constellation& c, int sat, double t) {
    double theta = deg2rad(c.phase_offset_deg(sat)) + c.mean_motion_rad_s() * t;
    double r = c.orbit_radius_m();
    Vec3 in_plane{r * std::cos(theta), r * std::sin(theta), 0.0};
    double inc = deg2rad(c.inclination_deg);
    Vec3 tilted{in_plane.x, in_plane.y * std::cos(inc), in_plane.y * std::sin(inc)};
    double raan = deg2rad(c.raan_deg);
    double cr = std::cos(raan), sr = std::sin(raan);
    return {cr * tilted.x - sr * tilted.y, sr * tilted.x + cr * tilted.y, tilted.z};
}

std::vector<Vec3> propagate(const Constellation& c, double t) {
    std::vector<Vec3> out;
    out.reserve(static_cast<std::size_t>(c.n_satellites));
    for (int s = 0; s < c.n_satellites; ++s) out.push_back(satellite_position(c, s, t));
    return out;
}

double elevation_deg(const Vec3& ground_ecef, const Vec3& sat_ecef) {
    Vec3 zenith = normalized(ground_ecef);
    Vec3 to_sat = sat_ecef - ground_ecef;
    double sin_el = dot(zenith, normalized(to_sat));
    return rad2deg(std::asin(std::clamp(sin_el, -1.0, 1.0)));
}

int assign_satellite(const Geodetic& position, const Constellation& c, double t) {
    Vec3 ground = to_ecef(position);
    int best = -1;
    double best_el = 0.0;
    for (int s = 0; s < c.n_satellites; ++s) {
        double el = elevation_deg(ground, satellite_position(c, s, t));
        if (el < c.min_elevation_deg) continue;
        if (best < 0 || el > best_el) {
            best = s;
            best_el = el;
        }
    }
    if (best < 0) {
        throw NoVisibleSatellite("no satellite above " + std::to_string(c.min_elevation_deg) +
                                 " deg elevation at t=" + std::to_string(t));
    }
    return best;
}

int HandoverSchedule::satellite_at(double t) const {
    for (const auto& iv : intervals) {
        if (t >= iv.t_from && t < iv.t_to) return iv.satellite_id;
    }
    if (!intervals.empty() && t == intervals.back().t_to) return intervals.back().satellite_id;
    return -1;
}

HandoverSchedule build_handover_schedule(const Trajectory& trajectory, double t_start,
                                         double t_end, const Constellation& c, double dt) {
    HandoverSchedule sched;
    if (t_end <= t_start) return sched;
    for (double t = t_start; t < t_end; t += dt) {
        int sat = assign_satellite(trajectory.position_at(t), c, t);
        double to = std::min(t + dt, t_end);
        if (!sched.intervals.empty() && sched.intervals.back().satellite_id == sat) {
            sched.intervals.back().t_to = to;
        } else {
            sched.intervals.push_back({t, to, sat});
        }
    }
    return sched;
}

double angular_separation(const Vec3& sat_ecef, const Geodetic& p_i, const Geodetic& p_j) {
    return angle_between(to_ecef(p_i) - sat_ecef, to_ecef(p_j) - sat_ecef);
}

double set_separation(std::span<const Geodetic> area_i, std::span<const Geodetic> area_j,
                      const Vec3& sat_ecef) {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& pi : area_i) {
        for (const auto& pj : area_j) {
            best = std::min(best, angular_separation(sat_ecef, pi, pj));
        }
    }
    return best;
}

std::vector<Geodetic> sample_disc(const Geodetic& center, double radius_m, int n_boundary) {
    std::vector<Geodetic> pts{center};
    if (radius_m <= 0.0) return pts;
    pts.reserve(static_cast<std::size_t>(n_boundary) + 1);
    for (int k = 0; k < n_boundary; ++k) {
        double bearing = 2.0 * kPi * k / n_boundary;
        pts.push_back(gc_destination(center, bearing, radius_m));
    }
    return pts;
}

}  // namespace beamplan
