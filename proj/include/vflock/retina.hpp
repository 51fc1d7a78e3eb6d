#pragma once
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "vflock/geometry.hpp"

namespace vflock {

// Binary retina over [-pi, pi); pixel k spans [-pi + k*dphi, -pi + (k+1)*dphi).
struct VisualField {
    std::vector<std::uint8_t> values;

    VisualField() = default;
    explicit VisualField(int n) : values(static_cast<std::size_t>(n), 0) {}

    int n() const { return static_cast<int>(values.size()); }
    double delta_phi() const { return two_pi / n(); }
    double center_angle(int k) const { return -pi + (k + 0.5) * delta_phi(); }
};

// Trigonometric mask tables for one retina resolution. Area masks are sampled
// at pixel centers, derivative (edge) masks at pixel right edges, where the
// forward difference lives. The tables are built mirror-symmetric by
// construction (cc[n-1-k] == cc[k] bitwise, etc.) so that reflecting a field
// about phi = 0 flips dpsi and preserves dv exactly.
struct MaskTables {
    std::vector<double> cc, sc; // cos/sin at pixel centers
    std::vector<double> ce, se; // cos/sin at pixel right edges

    explicit MaskTables(int n) : cc(n), sc(n), ce(n), se(n) {
        const double dphi = two_pi / n;
        for (int k = 0; k < n / 2; ++k) { // centers at negative angles
            const double a = -pi + (k + 0.5) * dphi;
            cc[k] = std::cos(a);
            sc[k] = std::sin(a);
            cc[n - 1 - k] = cc[k];
            sc[n - 1 - k] = -sc[k];
        }
        for (int k = 0; k + 1 < n / 2; ++k) { // edges at negative angles
            const double a = -pi + (k + 1) * dphi;
            ce[k] = std::cos(a);
            se[k] = std::sin(a);
            ce[n - 2 - k] = ce[k];
            se[n - 2 - k] = -se[k];
        }
        ce[n / 2 - 1] = 1.0; // edge at phi = 0
        se[n / 2 - 1] = 0.0;
        ce[n - 1] = -1.0;    // edge at the +-pi seam
        se[n - 1] = 0.0;
    }
};

inline const MaskTables& masks_for(int n) {
    static std::mutex mu;
    static std::map<int, std::unique_ptr<const MaskTables>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it == cache.end())
        it = cache.emplace(n, std::make_unique<const MaskTables>(n)).first;
    return *it->second;
}

} // namespace vflock
