#pragma once

#include <span>
#include <stdexcept>
#include <vector>

#include "beamplan/geo.hpp"

namespace beamplan {

inline constexpr double kEarthMuM3S2 = 3.986004418e14;

struct NoVisibleSatellite : std::runtime_error {
    explicit NoVisibleSatellite(const std::string& what) : std::runtime_error(what) {}
};

// Circular-orbit ring; positions are Earth-fixed (no Earth rotation term),
// which keeps the coverage pattern periodic with the orbital period.
struct Constellation {
    int n_satellites = 7;
    double altitude_m = 8062000.0;
    double inclination_deg = 0.0;
    double raan_deg = 0.0;
    std::vector<double> phase_offsets_deg;  // empty => evenly phased
    double min_elevation_deg = 20.0;

    double orbit_radius_m() const { return kEarthRadiusM + altitude_m; }
    double mean_motion_rad_s() const {
        double a = orbit_radius_m();
        return std::sqrt(kEarthMuM3S2 / (a * a * a));
    }
    double period_s() const { return 2.0 * kPi / mean_motion_rad_s(); }
    double phase_offset_deg(int sat) const {
        if (!phase_offsets_deg.empty()) return phase_offsets_deg[static_cast<std::size_t>(sat)];
        return 360.0 * sat / n_satellites;
    }
};

Vec3 satellite_position(const Constellation& c, int sat, double t);
std::vector<Vec3> propagate(const Constellation& c, double t);

// Elevation of a satellite above the local horizon of a ground point, degrees.
double elevation_deg(const Vec3& ground_ecef, const Vec3& sat_ecef);

// Visible satellite with maximum elevation; ties broken by lowest id.
// Throws NoVisibleSatellite when the elevation mask excludes all satellites.
int assign_satellite(const Geodetic& position, const Constellation& c, double t);

struct HandoverInterval {
    double t_from = 0.0;
    double t_to = 0.0;
    int satellite_id = -1;
};

// Piecewise-constant serving satellite over [t_start, t_end].
struct HandoverSchedule {
    std::vector<HandoverInterval> intervals;

    bool empty() const { return intervals.empty(); }
    int n_handovers() const {
        return intervals.empty() ? 0 : static_cast<int>(intervals.size()) - 1;
    }
    // Satellite serving at time t; -1 outside the schedule.
    int satellite_at(double t) const;
};

// Samples the serving satellite at dt over [t_start, t_end] and merges
// maximal runs into intervals.
HandoverSchedule build_handover_schedule(const Trajectory& trajectory, double t_start,
                                         double t_end, const Constellation& c, double dt);

// Angle at the satellite between the directions to two footprint centers.
double angular_separation(const Vec3& sat_ecef, const Geodetic& p_i, const Geodetic& p_j);

// Minimum pairwise angular separation between two sampled position sets (Eq.-style
// set-to-set separation); exhaustive over all pairs.
double set_separation(std::span<const Geodetic> area_i, std::span<const Geodetic> area_j,
                      const Vec3& sat_ecef);

// Sampled disc around a center: the center plus n_boundary points on the circle
// of the given ground radius. radius <= 0 yields just the center.
std::vector<Geodetic> sample_disc(const Geodetic& center, double radius_m, int n_boundary = 16);

}  // namespace beamplan
