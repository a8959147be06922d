#pragma once

#include <cmath>
#include <numbers>

namespace cci {

inline constexpr double two_pi = 2.0 * std::numbers::pi;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    friend constexpr Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
    friend constexpr Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
    friend constexpr bool operator==(Vec2 a, Vec2 b) { return a.x == b.x && a.y == b.y; }
};

inline double distance(Vec2 a, Vec2 b) {
    return std::hypot(b.x - a.x, b.y - a.y);
}

// Absolute bearing of b as seen from a, in [0, 2*pi).
inline double bearing(Vec2 a, Vec2 b) {
    double ang = std::atan2(b.y - a.y, b.x - a.x);
    if (ang < 0.0) ang += two_pi;
    return ang;
}

// Smallest absolute angle between two bearings, in [0, pi].
inline double angular_offset(double bearing_a, double bearing_b) {
    double d = std::fmod(std::fabs(bearing_a - bearing_b), two_pi);
    return d > std::numbers::pi ? two_pi - d : d;
}

inline bool finite(Vec2 v) {
    return std::isfinite(v.x) && std::isfinite(v.y);
}

} // namespace cci
