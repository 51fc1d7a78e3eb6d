#pragma once
#include <cmath>
#include <numbers>

namespace vflock {

inline constexpr double pi = std::numbers::pi_v<double>;
inline constexpr double two_pi = 2.0 * std::numbers::pi_v<double>;

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(const Vec2& a, const Vec2& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

// wrap to [0, 2pi)
inline double wrap_2pi(double a) {
    a = std::fmod(a, two_pi);
    if (a < 0.0) a += two_pi;
    if (a >= two_pi) a = 0.0; // fmod can land exactly on 2pi after the add
    return a;
}

// wrap to (-pi, pi]
inline double wrap_pm_pi(double a) {
    a = std::fmod(a, two_pi);
    if (a > pi) a -= two_pi;
    else if (a <= -pi) a += two_pi;
    return a;
}

} // namespace vflock
