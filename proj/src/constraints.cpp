#include "beamplan/constraints.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <limits>
#include <thread>

namespace beamplan {

namespace {

bool contains_pair(const std::vector<std::pair<int, int>>& v, int i, int j) {
    auto p = std::minmax(i, j);
    return std::binary_search(v.begin(), v.end(), std::make_pair(p.first, p.second));
}

}  // namespace

bool RestrictionSets::in_interference(int i, int j) const {
    return contains_pair(interference, i, j);
}

bool RestrictionSets::in_handover(int i, int j) const { return contains_pair(handover, i, j); }

std::size_t RestrictionSets::total_unique() const {
    std::vector<std::pair<int, int>> all = interference;
    all.insert(all.end(), handover.begin(), handover.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all.size();
}

bool RestrictionSets::is_superset_of(const RestrictionSets& other) const {
    return std::includes(interference.begin(), interference.end(), other.interference.begin(),
                         other.interference.end()) &&
           std::includes(handover.begin(), handover.end(), other.handover.begin(),
                         other.handover.end());
}

void RestrictionSets::write_edge_list(const std::string& path) const {
    std::ofstream out(path);
    for (const auto& [i, j] : interference) out << i << " " << j << " A\n";
    for (const auto& [i, j] : handover) out << i << " " << j << " E\n";
}

namespace {

// Perimeter resampling of a polygon: n points along the boundary plus the centroid.
std::vector<Geodetic> sample_polygon(const std::vector<Geodetic>& poly, int n) {
    std::vector<Geodetic> pts;
    if (poly.empty()) return pts;
    Vec3 acc{0, 0, 0};
    for (const auto& v : poly) acc = acc + normalized(to_ecef(v));
    pts.push_back(to_geodetic(kEarthRadiusM * normalized(acc)));
    std::size_t m = poly.size();
    std::vector<double> edge_len(m);
    double perimeter = 0.0;
    for (std::size_t e = 0; e < m; ++e) {
        edge_len[e] = great_circle_m(poly[e], poly[(e + 1) % m]);
        perimeter += edge_len[e];
    }
    if (perimeter <= 0.0) {
        pts.push_back(poly.front());
        return pts;
    }
    for (int k = 0; k < n; ++k) {
        double s = perimeter * k / n;
        std::size_t e = 0;
        while (e + 1 < m && s > edge_len[e]) {
            s -= edge_len[e];
            ++e;
        }
        double f = edge_len[e] > 0.0 ? s / edge_len[e] : 0.0;
        pts.push_back(gc_interpolate(poly[e], poly[(e + 1) % m], f));
    }
    return pts;
}

}  // namespace

std::vector<Geodetic> position_set(const Beam& beam, double t, const ConstraintConfig& config) {
    if (config.gamma_m > 0.0 && beam.position_uncertain) {
        if (beam.operational_area.has_value()) {
            return sample_polygon(*beam.operational_area, config.area_boundary_samples);
        }
        return sample_disc(beam.position_at(t), config.gamma_m, config.area_boundary_samples);
    }
    return {beam.position_at(t)};
}

int alpha(const Beam& beam_i, const Beam& beam_j, double t_i, double t_j,
          const ConstraintConfig& config, const Constellation& constellation,
          const ScheduleMap& schedules) {
    if (!beam_i.active_at(t_i) || !beam_j.active_at(t_j)) return 0;
    const Beam& vantage_beam = beam_i.id <= beam_j.id ? beam_i : beam_j;
    double vantage_t = beam_i.id <= beam_j.id ? t_i : t_j;
    int sat = schedules.at(vantage_beam.id).satellite_at(vantage_t);
    if (sat < 0) return 0;
    Vec3 sat_pos = satellite_position(constellation, sat, vantage_t);
    auto set_i = position_set(beam_i, t_i, config);
    auto set_j = position_set(beam_j, t_j, config);
    double sep = set_separation(set_i, set_j, sat_pos);
    return sep <= config.threshold_rad() ? 1 : 0;
}

int beta(const Beam& beam_i, const Beam& beam_j, double t_i, double t_j,
         const ScheduleMap& schedules) {
    if (!beam_i.active_at(t_i) || !beam_j.active_at(t_j)) return 0;
    int s_i = schedules.at(beam_i.id).satellite_at(t_i);
    int s_j = schedules.at(beam_j.id).satellite_at(t_j);
    return (s_i >= 0 && s_i == s_j) ? 1 : 0;
}

namespace {

constexpr int kBlock = 16;

// Per-beam samples on the global time grid, with pruning summaries.
struct BeamGrid {
    int k_lo = 0;
    int k_hi = -1;  // inclusive; empty when k_hi < k_lo
    std::vector<Vec3> ecef;
    std::vector<Geodetic> geo;
    std::vector<int> sat;
    // Chord-space pruning: effective center per sample plus a dilation radius
    // covering the S3 area.
    std::vector<Vec3> prune_pos;
    double dil_m = 0.0;
    std::vector<Vec3> block_center;
    std::vector<double> block_radius;
    Vec3 cap_center{};
    double cap_radius = 0.0;
    // Maximal grid-index runs per serving satellite.
    std::vector<std::vector<std::pair<int, int>>> sat_runs;

    int n() const { return k_hi - k_lo + 1; }
    bool empty() const { return k_hi < k_lo; }
};

BeamGrid make_beam_grid(const Beam& beam, const HandoverSchedule& sched,
                        const ConstraintConfig& config, int n_sats, double horizon_s) {
    BeamGrid g;
    double dt = config.dt_s;
    int K = static_cast<int>(std::floor((horizon_s - 1e-9) / dt)) + 1;
    g.k_lo = static_cast<int>(std::ceil(beam.t_start / dt - 1e-9));
    g.k_hi = std::min(K - 1, static_cast<int>(std::ceil(beam.t_end / dt - 1e-9)) - 1);
    if (g.empty()) return g;

    bool use_area = config.gamma_m > 0.0 && beam.position_uncertain;
    bool polygon = use_area && beam.operational_area.has_value();
    std::vector<Geodetic> poly_samples;
    Vec3 poly_center{};
    double poly_radius = 0.0;
    if (polygon) {
        poly_samples = sample_polygon(*beam.operational_area, config.area_boundary_samples);
        Vec3 acc{0, 0, 0};
        for (const auto& p : poly_samples) acc = acc + to_ecef(p);
        poly_center = (1.0 / static_cast<double>(poly_samples.size())) * acc;
        for (const auto& p : poly_samples) {
            poly_radius = std::max(poly_radius, norm(to_ecef(p) - poly_center));
        }
    }
    g.dil_m = polygon ? poly_radius : (use_area ? config.gamma_m : 0.0);

    int n = g.n();
    g.ecef.reserve(n);
    g.geo.reserve(n);
    g.sat.reserve(n);
    g.prune_pos.reserve(n);
    g.sat_runs.assign(static_cast<std::size_t>(n_sats), {});
    for (int k = g.k_lo; k <= g.k_hi; ++k) {
        double t = k * dt;
        Geodetic pos = beam.position_at(t);
        g.geo.push_back(pos);
        g.ecef.push_back(to_ecef(pos));
        g.prune_pos.push_back(polygon ? poly_center : g.ecef.back());
        int s = sched.satellite_at(t);
        g.sat.push_back(s);
        if (s >= 0) {
            auto& runs = g.sat_runs[static_cast<std::size_t>(s)];
            if (!runs.empty() && runs.back().second == k - 1) {
                runs.back().second = k;
            } else {
                runs.emplace_back(k, k);
            }
        }
    }

    int n_blocks = (n + kBlock - 1) / kBlock;
    g.block_center.reserve(n_blocks);
    g.block_radius.reserve(n_blocks);
    for (int b = 0; b < n_blocks; ++b) {
        int lo = b * kBlock, hi = std::min(n - 1, lo + kBlock - 1);
        Vec3 acc{0, 0, 0};
        for (int k = lo; k <= hi; ++k) acc = acc + g.prune_pos[static_cast<std::size_t>(k)];
        Vec3 c = (1.0 / (hi - lo + 1)) * acc;
        double r = 0.0;
        for (int k = lo; k <= hi; ++k) {
            r = std::max(r, norm(g.prune_pos[static_cast<std::size_t>(k)] - c));
        }
        g.block_center.push_back(c);
        g.block_radius.push_back(r);
    }
    Vec3 acc{0, 0, 0};
    for (const auto& p : g.prune_pos) acc = acc + p;
    g.cap_center = (1.0 / static_cast<double>(n)) * acc;
    for (const auto& p : g.prune_pos) {
        g.cap_radius = std::max(g.cap_radius, norm(p - g.cap_center));
    }
    return g;
}

struct PairResult {
    int i, j;
    bool in_alpha, in_beta;
};

class SetBuilder {
public:
    SetBuilder(std::span<const Beam> beams, const ScheduleMap& schedules,
               const ConstraintConfig& config, const Constellation& constellation,
               double horizon_s)
        : beams_(beams),
          schedules_(schedules),
          config_(config),
          constellation_(constellation) {
        double dt = config.dt_s;
        K_ = static_cast<int>(std::floor((horizon_s - 1e-9) / dt)) + 1;
        w_band_ = static_cast<int>(std::floor(config.t_d_s / dt + 1e-9));
        grids_.reserve(beams.size());
        for (const auto& b : beams_) {
            grids_.push_back(make_beam_grid(b, schedules.at(b.id), config,
                                            constellation.n_satellites, horizon_s));
        }
        sat_cache_.assign(static_cast<std::size_t>(constellation.n_satellites) *
                              static_cast<std::size_t>(K_),
                          Vec3{});
        for (int s = 0; s < constellation.n_satellites; ++s) {
            for (int k = 0; k < K_; ++k) {
                sat_cache_[static_cast<std::size_t>(s) * K_ + k] =
                    satellite_position(constellation, s, k * dt);
            }
        }
        // Largest possible slant range to a point on the visible Earth.
        double r_orbit = constellation.altitude_m + kEarthRadiusM;
        slant_max_m_ = std::sqrt(r_orbit * r_orbit - kEarthRadiusM * kEarthRadiusM) + 50000.0;
        chord_thresh_m_ = 2.0 * slant_max_m_ * std::sin(0.5 * config.threshold_rad());
    }

    PairResult evaluate(int i, int j) const {
        PairResult r{beams_[static_cast<std::size_t>(i)].id,
                     beams_[static_cast<std::size_t>(j)].id, false, false};
        const BeamGrid& gi = grids_[static_cast<std::size_t>(i)];
        const BeamGrid& gj = grids_[static_cast<std::size_t>(j)];
        if (gi.empty() || gj.empty()) return r;
        // Grid ranges must come within the band of each other at all.
        if (gi.k_lo > gj.k_hi + w_band_ || gj.k_lo > gi.k_hi + w_band_) return r;
        r.in_beta = beta_pair(gi, gj);
        r.in_alpha = alpha_pair(i, j, gi, gj);
        return r;
    }

    int n_beams() const { return static_cast<int>(beams_.size()); }

private:
    bool beta_pair(const BeamGrid& gi, const BeamGrid& gj) const {
        for (std::size_t s = 0; s < gi.sat_runs.size(); ++s) {
            for (const auto& [a1, b1] : gi.sat_runs[s]) {
                for (const auto& [a2, b2] : gj.sat_runs[s]) {
                    if (a1 <= b2 + w_band_ && a2 <= b1 + w_band_) return true;
                }
            }
        }
        return false;
    }

    bool alpha_pair(int i, int j, const BeamGrid& gi, const BeamGrid& gj) const {
        double dil = gi.dil_m + gj.dil_m;
        if (norm(gi.cap_center - gj.cap_center) - gi.cap_radius - gj.cap_radius >
            chord_thresh_m_ + dil) {
            return false;
        }
        const Beam& bi = beams_[static_cast<std::size_t>(i)];
        const Beam& bj = beams_[static_cast<std::size_t>(j)];
        bool plain = gi.dil_m == 0.0 && gj.dil_m == 0.0;
        int nbi = static_cast<int>(gi.block_center.size());
        int nbj = static_cast<int>(gj.block_center.size());
        for (int ci = 0; ci < nbi; ++ci) {
            for (int cj = 0; cj < nbj; ++cj) {
                // Band check at block granularity.
                int i_lo = gi.k_lo + ci * kBlock;
                int i_hi = std::min(gi.k_hi, i_lo + kBlock - 1);
                int j_lo = gj.k_lo + cj * kBlock;
                int j_hi = std::min(gj.k_hi, j_lo + kBlock - 1);
                if (i_lo > j_hi + w_band_ || j_lo > i_hi + w_band_) continue;
                if (norm(gi.block_center[static_cast<std::size_t>(ci)] -
                         gj.block_center[static_cast<std::size_t>(cj)]) -
                        gi.block_radius[static_cast<std::size_t>(ci)] -
                        gj.block_radius[static_cast<std::size_t>(cj)] >
                    chord_thresh_m_ + dil) {
                    continue;
                }
                for (int k1 = i_lo; k1 <= i_hi; ++k1) {
                    int lo = std::max(j_lo, k1 - w_band_);
                    int hi = std::min(j_hi, k1 + w_band_);
                    for (int k2 = lo; k2 <= hi; ++k2) {
                        const Vec3& pi = gi.prune_pos[static_cast<std::size_t>(k1 - gi.k_lo)];
                        const Vec3& pj = gj.prune_pos[static_cast<std::size_t>(k2 - gj.k_lo)];
                        if (norm(pi - pj) > chord_thresh_m_ + dil) continue;
                        if (plain ? alpha_point(i, j, gi, gj, k1, k2)
                                  : alpha_full(bi, bj, k1, k2)) {
                            return true;
                        }
                    }
                }
            }
        }
        return false;
    }

    // Fast path for point positions; bit-identical to alpha() on the same inputs.
    bool alpha_point(int i, int j, const BeamGrid& gi, const BeamGrid& gj, int k1,
                     int k2) const {
        bool i_vantage = beams_[static_cast<std::size_t>(i)].id <=
                         beams_[static_cast<std::size_t>(j)].id;
        const BeamGrid& gv = i_vantage ? gi : gj;
        int kv = i_vantage ? k1 : k2;
        int sat = gv.sat[static_cast<std::size_t>(kv - gv.k_lo)];
        if (sat < 0) return false;
        const Vec3& sat_pos = sat_cache_[static_cast<std::size_t>(sat) * K_ + kv];
        const Vec3& pi = gi.ecef[static_cast<std::size_t>(k1 - gi.k_lo)];
        const Vec3& pj = gj.ecef[static_cast<std::size_t>(k2 - gj.k_lo)];
        return angle_between(pi - sat_pos, pj - sat_pos) <= config_.threshold_rad();
    }

    bool alpha_full(const Beam& bi, const Beam& bj, int k1, int k2) const {
        double t1 = k1 * config_.dt_s, t2 = k2 * config_.dt_s;
        return alpha(bi, bj, t1, t2, config_, constellation_, schedules_) == 1;
    }

    std::span<const Beam> beams_;
    const ScheduleMap& schedules_;
    ConstraintConfig config_;
    const Constellation& constellation_;
    std::vector<BeamGrid> grids_;
    std::vector<Vec3> sat_cache_;
    int K_ = 0;
    int w_band_ = 0;
    double slant_max_m_ = 0.0;
    double chord_thresh_m_ = 0.0;
};

}  // namespace

RestrictionSets build_restriction_sets(std::span<const Beam> beams, const ScheduleMap& schedules,
                                       const ConstraintConfig& config,
                                       const Constellation& constellation, double horizon_s,
                                       int n_workers) {
    SetBuilder builder(beams, schedules, config, constellation, horizon_s);
    int n = builder.n_beams();
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }

    if (n_workers <= 0) {
        n_workers = static_cast<int>(std::thread::hardware_concurrency());
        if (n_workers < 1) n_workers = 1;
    }
    n_workers = std::min<int>(n_workers, 16);

    constexpr std::size_t kChunk = 4096;
    std::size_t n_chunks = (pairs.size() + kChunk - 1) / kChunk;
    std::vector<std::vector<PairResult>> chunk_results(n_chunks);
    std::atomic<std::size_t> next_chunk{0};

    auto work = [&]() {
        for (;;) {
            std::size_t c = next_chunk.fetch_add(1);
            if (c >= n_chunks) return;
            std::size_t lo = c * kChunk, hi = std::min(pairs.size(), lo + kChunk);
            auto& out = chunk_results[c];
            for (std::size_t idx = lo; idx < hi; ++idx) {
                PairResult r = builder.evaluate(pairs[idx].first, pairs[idx].second);
                if (r.in_alpha || r.in_beta) out.push_back(r);
            }
        }
    };

    if (n_workers == 1 || pairs.size() < 2 * kChunk) {
        work();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(n_workers));
        for (int w = 0; w < n_workers; ++w) threads.emplace_back(work);
        for (auto& t : threads) t.join();
    }

    RestrictionSets sets;
    for (const auto& chunk : chunk_results) {
        for (const auto& r : chunk) {
            auto p = std::minmax(r.i, r.j);
            if (r.in_alpha) sets.interference.emplace_back(p.first, p.second);
            if (r.in_beta) sets.handover.emplace_back(p.first, p.second);
        }
    }
    std::sort(sets.interference.begin(), sets.interference.end());
    std::sort(sets.handover.begin(), sets.handover.end());
    return sets;
}

}  // namespace beamplan
