#pragma once

#include <cmath>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "beamplan/constraints.hpp"
#include "beamplan/domain.hpp"

namespace beamplan {

struct InconsistentInput : std::runtime_error {
    explicit InconsistentInput(const std::string& what) : std::runtime_error(what) {}
};
struct SearchSpaceTooLarge : std::runtime_error {
    explicit SearchSpaceTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct SolveConfig {
    int x_ch = 0;         // S4: reserve x_ch*b_min adjacent channels per mobile beam
    int x_slots = 0;      // S5: backup slots of b_min channels per mobile beam
    double x_spec = 0.0;  // S6: spectrum fraction kept free of baseline assignments
    std::uint64_t seed = 0;
    int local_search_passes = 2;

    int reserved_channels(int n_channels) const {
        return x_spec > 0.0 ? static_cast<int>(std::ceil(x_spec * n_channels)) : 0;
    }
    // Lowest channel a baseline assignment may start at.
    int baseline_f_lo(int n_channels) const { return 1 + reserved_channels(n_channels); }
};

struct SolveReport {
    double objective_watts = 0.0;  // time-averaged total power over the horizon
    std::vector<int> served_beams;
    std::vector<int> deactivated_beams;
    double wall_time_s = 0.0;  // informational, never serialized
};

// Seconds of the horizon grid during which the beam is active (the quadrature
// the power metric uses everywhere).
double grid_active_seconds(const Beam& beam, double dt_s, double horizon_s);

// Time-averaged total power of a plan; shared by solver reports and metrics.
double average_power_watts(const FrequencyPlan& plan, std::span<const Beam> beams, double dt_s,
                           double horizon_s);

// Proactive stage: one static assignment per beam of U_info minimizing total
// power subject to the restriction sets, honoring S4-S6 reservations. Beams
// that cannot be placed are DEACTIVATED, never dropped.
std::pair<FrequencyPlan, SolveReport> solve_baseline(std::span<const Beam> beams,
                                                     const RestrictionSets& sets,
                                                     const GridConfig& grid,
                                                     const SolveConfig& config, double dt_s,
                                                     double horizon_s);

struct ExactResult {
    bool all_served = false;
    int n_served = 0;
    double objective_watts = 0.0;
    FrequencyPlan plan;
};

// Exhaustive small-instance oracle: globally optimal (max served beams, then
// min power). Branch-and-bound node budget enforces the size precondition.
ExactResult solve_exact(std::span<const Beam> beams, const RestrictionSets& sets,
                        const GridConfig& grid, double dt_s, double horizon_s, int f_lo = 1,
                        std::uint64_t node_budget = 10000000);

// Checks the per-instant handover/interference disjunctions on the dt grid
// using instantaneous alpha/beta (point positions, base threshold), plus the
// variable-domain bounds. S5 slots are validated like assignments. Reports one
// violation per (pair, kind) with the first offending time.
std::vector<std::string> validate_plan(const FrequencyPlan& plan, std::span<const Beam> beams,
                                       const ScheduleMap& schedules,
                                       const Constellation& constellation,
                                       const GridConfig& grid, double delta_min_rad,
                                       double dt_s, double horizon_s);

// Big-M integer model of the baseline problem in CPLEX LP text format
// (diagnostic; not on the solve path).
void write_lp_model(const std::string& path, std::span<const Beam> beams,
                    const RestrictionSets& sets, const GridConfig& grid,
                    const SolveConfig& config, double dt_s, double horizon_s);

}  // namespace beamplan
