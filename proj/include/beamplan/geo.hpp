#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

namespace beamplan {

inline constexpr double kEarthRadiusM = 6371000.0;
inline constexpr double kPi = 3.14159265358979323846;

inline double deg2rad(double d) { return d * kPi / 180.0; }
inline double rad2deg(double r) { return r * 180.0 / kPi; }

struct Vec3 {
    double x = 0.0, y = 0.0, z = 0.0;
};

inline Vec3 operator+(const Vec3& a, const Vec3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
inline Vec3 operator-(const Vec3& a, const Vec3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
inline Vec3 operator*(double s, const Vec3& v) { return {s * v.x, s * v.y, s * v.z}; }
inline double dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }
inline Vec3 cross(const Vec3& a, const Vec3& b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}
inline double norm(const Vec3& v) { return std::sqrt(dot(v, v)); }
inline Vec3 normalized(const Vec3& v) {
    double n = norm(v);
    return n > 0.0 ? Vec3{v.x / n, v.y / n, v.z / n} : v;
}

// Angle between two direction vectors, stable near 0 and pi.
inline double angle_between(const Vec3& a, const Vec3& b) {
    return std::atan2(norm(cross(a, b)), dot(a, b));
}

// Geodetic position on a spherical Earth.
struct Geodetic {
    double lat_deg = 0.0;
    double lon_deg = 0.0;
    double alt_m = 0.0;
};

inline Vec3 to_ecef(const Geodetic& g) {
    double r = kEarthRadiusM + g.alt_m;
    double lat = deg2rad(g.lat_deg), lon = deg2rad(g.lon_deg);
    double c = std::cos(lat);
    return {r * c * std::cos(lon), r * c * std::sin(lon), r * std::sin(lat)};
}

inline Geodetic to_geodetic(const Vec3& v) {
    double r = norm(v);
    Geodetic g;
    g.lat_deg = rad2deg(std::asin(v.z / r));
    g.lon_deg = rad2deg(std::atan2(v.y, v.x));
    g.alt_m = r - kEarthRadiusM;
    return g;
}

// Central angle between two surface points (haversine).
inline double central_angle(const Geodetic& a, const Geodetic& b) {
    double la = deg2rad(a.lat_deg), lb = deg2rad(b.lat_deg);
    double dlat = lb - la;
    double dlon = deg2rad(b.lon_deg - a.lon_deg);
    double s1 = std::sin(0.5 * dlat), s2 = std::sin(0.5 * dlon);
    double h = s1 * s1 + std::cos(la) * std::cos(lb) * s2 * s2;
    return 2.0 * std::atan2(std::sqrt(h), std::sqrt(1.0 - h));
}

inline double great_circle_m(const Geodetic& a, const Geodetic& b) {
    return kEarthRadiusM * central_angle(a, b);
}

// Great-circle interpolation at fraction f in [0,1]; altitude interpolated linearly.
inline Geodetic gc_interpolate(const Geodetic& a, const Geodetic& b, double f) {
    if (f <= 0.0) return a;
    if (f >= 1.0) return b;
    Vec3 ua = normalized(to_ecef(Geodetic{a.lat_deg, a.lon_deg, 0.0}));
    Vec3 ub = normalized(to_ecef(Geodetic{b.lat_deg, b.lon_deg, 0.0}));
    double omega = angle_between(ua, ub);
    Vec3 u;
    if (omega < 1e-12) {
        u = normalized(ua + f * (ub - ua));
    } else {
        double s = std::sin(omega);
        u = normalized((std::sin((1.0 - f) * omega) / s) * ua + (std::sin(f * omega) / s) * ub);
    }
    Geodetic g = to_geodetic(kEarthRadiusM * u);
    g.alt_m = a.alt_m + f * (b.alt_m - a.alt_m);
    return g;
}

// Destination point after travelling dist_m along the given initial bearing.
inline Geodetic gc_destination(const Geodetic& p, double bearing_rad, double dist_m) {
    double lat1 = deg2rad(p.lat_deg), lon1 = deg2rad(p.lon_deg);
    double ang = dist_m / kEarthRadiusM;
    double lat2 = std::asin(std::sin(lat1) * std::cos(ang) +
                            std::cos(lat1) * std::sin(ang) * std::cos(bearing_rad));
    double lon2 = lon1 + std::atan2(std::sin(bearing_rad) * std::sin(ang) * std::cos(lat1),
                                    std::cos(ang) - std::sin(lat1) * std::sin(lat2));
    return {rad2deg(lat2), rad2deg(lon2), p.alt_m};
}

inline double initial_bearing(const Geodetic& a, const Geodetic& b) {
    double la = deg2rad(a.lat_deg), lb = deg2rad(b.lat_deg);
    double dlon = deg2rad(b.lon_deg - a.lon_deg);
    double y = std::sin(dlon) * std::cos(lb);
    double x = std::cos(la) * std::sin(lb) - std::sin(la) * std::cos(lb) * std::cos(dlon);
    return std::atan2(y, x);
}

struct TrajectorySample {
    double t = 0.0;
    Geodetic position;
};

// Time-sampled path; positions between samples follow the great circle.
struct Trajectory {
    std::vector<TrajectorySample> samples;

    static Trajectory fixed_point(const Geodetic& p) {
        return Trajectory{{TrajectorySample{0.0, p}}};
    }

    bool empty() const { return samples.empty(); }

    // Clamps outside [first, last]; exact at sample timestamps.
    Geodetic position_at(double t) const {
        const auto& s = samples;
        if (s.size() == 1 || t <= s.front().t) return s.front().position;
        if (t >= s.back().t) return s.back().position;
        auto it = std::lower_bound(s.begin(), s.end(), t,
                                   [](const TrajectorySample& a, double v) { return a.t < v; });
        if (it->t == t) return it->position;
        const auto& a = *(it - 1);
        const auto& b = *it;
        double f = (t - a.t) / (b.t - a.t);
        return gc_interpolate(a.position, b.position, f);
    }

    // Same path with all timestamps shifted by dt.
    Trajectory shifted(double dt) const {
        Trajectory out = *this;
        for (auto& s : out.samples) s.t += dt;
        return out;
    }
};

}  // namespace beamplan
