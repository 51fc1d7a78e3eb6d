#pragma once
#include <vector>

#include "vflock/params.hpp"
#include "vflock/retina.hpp"

namespace vflock {

// One agent's silhouette on the focal retina, before rasterization.
// phi_lo/phi_hi are relative to the focal heading; the interval may extend
// beyond +-pi (seam handled at rasterization).
struct BlobInterval {
    int source = -1;     // index of the projected agent
    double phi_lo = 0.0;
    double phi_hi = 0.0;
    double distance = 0.0;

    double width() const { return phi_hi - phi_lo; }
    double center() const { return 0.5 * (phi_lo + phi_hi); }
};

// Offline replay input: one detection box on a camera frame.
struct DetectionBox {
    double x_min = 0.0;
    double x_max = 0.0;
    double height = 0.0;
    double frame_width = 0.0;
};

// Minimal-image copy of `other` among the 9 torus translates; ties broken by
// the fixed enumeration dx in {0,-W,+W} x dy in {0,-H,+H}, first minimum wins.
Vec2 nearest_torus_image(const Vec2& focal, const Vec2& other, const Arena& arena);

BlobInterval angular_interval(const AgentState& focal, const Vec2& other_pos, double radius);

// drops sub-pixel blobs and blobs beyond the vision range
std::vector<BlobInterval> apply_visibility_cutoff(std::vector<BlobInterval> intervals,
                                                  const ModelParams& params);

// keeps an interval in full iff it intersects the active FOV [-phi_L, phi_L]
// (blob recovery: the part beyond the limit is restored, not truncated)
std::vector<BlobInterval> limit_fov(std::vector<BlobInterval> intervals, double fov_half);

VisualField rasterize(const std::vector<BlobInterval>& intervals, int n_ret);

VisualField build_vpf(int focal, const std::vector<AgentState>& states,
                      const Arena& arena, const ModelParams& params);

// detection-box replay: linear pixel->angle map over the camera FOV, with
// square-box recovery at frame edges and the >50% overlap / <3 px filters
VisualField vpf_from_boxes(const std::vector<DetectionBox>& boxes, double camera_fov, int n_ret);

} // namespace vflock
