#pragma once

#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "beamplan/domain.hpp"

namespace beamplan {

struct ConstraintConfig {
    double delta_min_rad = deg2rad(0.8);
    double t_d_s = 0.0;    // S1 delay horizon; 0 disables
    double x_min = 1.0;    // S2 threshold multiplier; 1 disables
    double gamma_m = 0.0;  // S3 operational-area radius; 0 disables
    double dt_s = 60.0;
    int area_boundary_samples = 16;

    double threshold_rad() const { return x_min * delta_min_rad; }
};

// Unordered beam pairs (stored with i < j, sorted) that hold an interference
// (R_A) or handover (R_E) restriction at some point of the horizon.
struct RestrictionSets {
    std::vector<std::pair<int, int>> interference;
    std::vector<std::pair<int, int>> handover;

    bool in_interference(int i, int j) const;
    bool in_handover(int i, int j) const;
    std::size_t total_unique() const;  // |R_A u R_E|

    bool is_superset_of(const RestrictionSets& other) const;
    void write_edge_list(const std::string& path) const;
};

using ScheduleMap = std::map<int, HandoverSchedule>;

// Position set of a beam at time t under the active config: the plain position,
// or, with S3 active for an uncertain beam, the sampled operational area.
std::vector<Geodetic> position_set(const Beam& beam, double t, const ConstraintConfig& config);

// 1 iff both beams are active and their position sets are within the
// (S2-scaled) separation threshold, measured from the serving satellite of the
// lower-id beam at its own time.
int alpha(const Beam& beam_i, const Beam& beam_j, double t_i, double t_j,
          const ConstraintConfig& config, const Constellation& constellation,
          const ScheduleMap& schedules);

// 1 iff both beams are active and their schedules put them on the same
// satellite at the respective times.
int beta(const Beam& beam_i, const Beam& beam_j, double t_i, double t_j,
         const ScheduleMap& schedules);

// Collapses the time-dependent alpha/beta onto the Delta-t grid (with the S1
// double-max over shifts in [0, t_d]) into restriction sets. Deterministic and
// independent of n_workers.
RestrictionSets build_restriction_sets(std::span<const Beam> beams, const ScheduleMap& schedules,
                                       const ConstraintConfig& config,
                                       const Constellation& constellation, double horizon_s,
                                       int n_workers = 0);

}  // namespace beamplan
