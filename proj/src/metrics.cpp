#include "vflock/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "vflock/errors.hpp"

namespace vflock {

double polarization(const std::vector<double>& headings) {
    double sx = 0.0, sy = 0.0;
    for (double psi : headings) {
        sx += std::cos(psi);
        sy += std::sin(psi);
    }
    return std::hypot(sx, sy) / headings.size();
}

static double pair_distance(const Vec2& a, const Vec2& b, const Arena& arena) {
    double dx = b.x - a.x;
    double dy = b.y - a.y;
    if (arena.boundary == Boundary::periodic) {
        dx -= arena.width * std::round(dx / arena.width);
        dy -= arena.height * std::round(dy / arena.height);
    }
    return std::hypot(dx, dy);
}

double mean_iid(const std::vector<Vec2>& positions, const Arena& arena) {
    const int n = static_cast<int>(positions.size());
    if (n < 2) throw DegenerateInput("mean_iid needs at least two agents");
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            sum += pair_distance(positions[i], positions[j], arena);
    return sum / (n * (n - 1) / 2);
}

std::vector<double> distance_matrix(const std::vector<Vec2>& positions, const Arena& arena) {
    const int n = static_cast<int>(positions.size());
    std::vector<double> d(static_cast<std::size_t>(n) * n, 0.0);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double v = pair_distance(positions[i], positions[j], arena);
            d[static_cast<std::size_t>(i) * n + j] = v;
            d[static_cast<std::size_t>(j) * n + i] = v;
        }
    }
    return d;
}

int count_overlapping(const std::vector<Vec2>& positions, const Arena& arena, double radius) {
    const int n = static_cast<int>(positions.size());
    std::vector<bool> overlapping(n, false);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (pair_distance(positions[i], positions[j], arena) < 2.0 * radius) {
                overlapping[i] = true;
                overlapping[j] = true;
            }
        }
    }
    return static_cast<int>(std::count(overlapping.begin(), overlapping.end(), true));
}

double overlap_ratio(const std::vector<std::vector<Vec2>>& frames, const Arena& arena,
                     double radius) {
    if (frames.empty()) throw DegenerateInput("overlap_ratio on an empty trajectory");
    const int n = static_cast<int>(frames.front().size());
    // printed formula: (1/(2N)) * sum_i count_i/T * 100; summing the per-step
    // overlapping-agent counts gives the same double sum
    long total = 0;
    for (const auto& frame : frames)
        total += count_overlapping(frame, arena, radius);
    const double T = static_cast<double>(frames.size());
    return 100.0 * static_cast<double>(total) / (2.0 * n * T);
}

static double cross(const Vec2& o, const Vec2& a, const Vec2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

std::vector<int> convex_hull(const std::vector<Vec2>& points) {
    const int n = static_cast<int>(points.size());
    std::vector<int> idx(n);
    for (int i = 0; i < n; ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return points[a].x < points[b].x ||
               (points[a].x == points[b].x && points[a].y < points[b].y);
    });
    idx.erase(std::unique(idx.begin(), idx.end(),
                          [&](int a, int b) {
                              return points[a].x == points[b].x && points[a].y == points[b].y;
                          }),
              idx.end());
    const int m = static_cast<int>(idx.size());
    if (m < 3) return idx;

    // monotone chain, strict turns (collinear points dropped), CCW order
    std::vector<int> hull(2 * m);
    int k = 0;
    for (int i = 0; i < m; ++i) {
        while (k >= 2 && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx[i]]) <= 0.0)
            --k;
        hull[k++] = idx[i];
    }
    const int lower = k + 1;
    for (int i = m - 2; i >= 0; --i) {
        while (k >= lower && cross(points[hull[k - 2]], points[hull[k - 1]], points[idx[i]]) <= 0.0)
            --k;
        hull[k++] = idx[i];
    }
    hull.resize(k - 1);
    return hull;
}

double circularity(const std::vector<Vec2>& positions) {
    if (positions.size() < 3) throw DegenerateInput("circularity needs at least three agents");
    const std::vector<int> hull = convex_hull(positions);
    const int nh = static_cast<int>(hull.size());
    if (nh < 3) return 0.0; // collinear or coincident

    double area2 = 0.0; // shoelace, twice the signed area
    for (int i = 0; i < nh; ++i) {
        const Vec2& p = positions[hull[i]];
        const Vec2& q = positions[hull[(i + 1) % nh]];
        area2 += p.x * q.y - q.x * p.y;
    }
    const double area = 0.5 * std::abs(area2);

    // hull diameter: farthest non-adjacent vertex pair (1 < |i-j| < nh-1)
    // when the hull has more than 3 vertices, otherwise max pairwise
    double dmax = 0.0;
    for (int i = 0; i < nh; ++i) {
        for (int j = i + 1; j < nh; ++j) {
            if (nh > 3) {
                const int gap = j - i;
                if (gap <= 1 || gap >= nh - 1) continue;
            }
            dmax = std::max(dmax, dist(positions[hull[i]], positions[hull[j]]));
        }
    }
    if (dmax == 0.0) return 0.0;
    return std::clamp(4.0 * area / (pi * dmax * dmax), 0.0, 1.0);
}

} // namespace vflock
