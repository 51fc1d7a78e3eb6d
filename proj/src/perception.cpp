#include "vflock/perception.hpp"

#include <algorithm>
#include <cmath>

#include "vflock/errors.hpp"

namespace vflock {

Vec2 nearest_torus_image(const Vec2& focal, const Vec2& other, const Arena& arena) {
    // fixed enumeration order; first strict minimum wins (determinism)
    const double sx[3] = {0.0, -arena.width, arena.width};
    const double sy[3] = {0.0, -arena.height, arena.height};
    Vec2 best = other;
    double best_d2 = -1.0;
    for (double dx : sx) {
        for (double dy : sy) {
            const Vec2 cand{other.x + dx, other.y + dy};
            const double ddx = cand.x - focal.x, ddy = cand.y - focal.y;
            const double d2 = ddx * ddx + ddy * ddy;
            if (best_d2 < 0.0 || d2 < best_d2) {
                best_d2 = d2;
                best = cand;
            }
        }
    }
    return best;
}

BlobInterval angular_interval(const AgentState& focal, const Vec2& other_pos, double radius) {
    const double dx = other_pos.x - focal.x;
    const double dy = other_pos.y - focal.y;
    const double d = std::hypot(dx, dy);
    if (d == 0.0)
        throw CoincidentAgents("angular_interval: zero distance");
    const double bearing = wrap_pm_pi(std::atan2(dy, dx) - focal.psi);
    const double half = d <= radius ? pi / 2.0 : std::asin(radius / d);
    BlobInterval blob;
    blob.phi_lo = bearing - half;
    blob.phi_hi = bearing + half;
    blob.distance = d;
    return blob;
}

std::vector<BlobInterval> apply_visibility_cutoff(std::vector<BlobInterval> intervals,
                                                  const ModelParams& params) {
    const double dphi = two_pi / params.n_ret;
    std::erase_if(intervals, [&](const BlobInterval& b) {
        return b.width() < dphi || b.distance > params.vision_range;
    });
    return intervals;
}

std::vector<BlobInterval> limit_fov(std::vector<BlobInterval> intervals, double fov_half) {
    // circular intervals intersect iff their center distance is at most the
    // sum of half-widths; blob centers are already wrapped to (-pi, pi]
    std::erase_if(intervals, [&](const BlobInterval& b) {
        return std::abs(wrap_pm_pi(b.center())) > 0.5 * b.width() + fov_half;
    });
    return intervals;
}

VisualField rasterize(const std::vector<BlobInterval>& intervals, int n_ret) {
    VisualField field(n_ret);
    const double dphi = two_pi / n_ret;
    for (const auto& b : intervals) {
        // pixel k's center lies in [lo, hi] (closed) iff k0 <= k <= k1;
        // out-of-range k wrap around the seam
        const long k0 = static_cast<long>(std::ceil((b.phi_lo + pi) / dphi - 0.5));
        const long k1 = static_cast<long>(std::floor((b.phi_hi + pi) / dphi - 0.5));
        for (long k = k0; k <= k1; ++k) {
            long idx = k % n_ret;
            if (idx < 0) idx += n_ret;
            field.values[idx] = 1;
        }
    }
    return field;
}

VisualField build_vpf(int focal, const std::vector<AgentState>& states,
                      const Arena& arena, const ModelParams& params) {
    const AgentState& me = states[focal];
    std::vector<BlobInterval> blobs;
    blobs.reserve(states.size());
    for (int j = 0; j < static_cast<int>(states.size()); ++j) {
        if (j == focal) continue;
        Vec2 pos{states[j].x, states[j].y};
        if (arena.boundary == Boundary::periodic)
            pos = nearest_torus_image(Vec2{me.x, me.y}, pos, arena);
        BlobInterval b = angular_interval(me, pos, params.radius);
        b.source = j;
        blobs.push_back(b);
    }
    blobs = limit_fov(apply_visibility_cutoff(std::move(blobs), params), params.fov_half);
    return rasterize(blobs, params.n_ret);
}

VisualField vpf_from_boxes(const std::vector<DetectionBox>& boxes, double camera_fov, int n_ret) {
    for (const auto& b : boxes) {
        if (b.x_min > b.x_max || b.x_min < 0.0 || b.x_max > b.frame_width || b.height <= 0.0)
            throw MalformedBox("vpf_from_boxes: inverted or out-of-frame bounds");
    }

    // filters act on the raw detections: drop boxes narrower than 3 source
    // pixels, then resolve >50% mutual overlaps by dropping the narrower box
    std::vector<DetectionBox> kept;
    for (const auto& b : boxes)
        if (b.x_max - b.x_min >= 3.0) kept.push_back(b);

    std::vector<bool> dropped(kept.size(), false);
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            if (dropped[i] || dropped[j]) continue;
            const double ov = std::min(kept[i].x_max, kept[j].x_max) -
                              std::max(kept[i].x_min, kept[j].x_min);
            if (ov <= 0.0) continue;
            const double wi = kept[i].x_max - kept[i].x_min;
            const double wj = kept[j].x_max - kept[j].x_min;
            if (ov > 0.5 * std::min(wi, wj)) {
                if (wi < wj) dropped[i] = true;
                else dropped[j] = true;
            }
        }
    }

    std::vector<BlobInterval> blobs;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        if (dropped[i]) continue;
        DetectionBox b = kept[i];
        // square-box recovery: a box cut off by the frame edge is extended
        // toward the out-of-frame side so its width matches its height
        if (b.height > b.x_max - b.x_min) {
            if (b.x_min == 0.0) b.x_min = b.x_max - b.height;
            else if (b.x_max == b.frame_width) b.x_max = b.x_min + b.height;
        }
        BlobInterval blob;
        blob.phi_lo = (b.x_min / b.frame_width - 0.5) * camera_fov;
        blob.phi_hi = (b.x_max / b.frame_width - 0.5) * camera_fov;
        blob.distance = 1.0; // replay path carries no range information
        blobs.push_back(blob);
    }
    return rasterize(blobs, n_ret);
}

} // namespace vflock
