#pragma once
#include <vector>

#include "vflock/params.hpp"

namespace vflock {

struct MetricsRecord {
    long t = 0;
    double P = 0.0;          // polarization
    double D_mean = 0.0;     // mean inter-individual distance (px)
    double RCA = 0.0;        // circularity
    int N_clus_max = 1;      // largest polarized cluster size
    int overlap_count = 0;   // agents overlapping at t
};

double polarization(const std::vector<double>& headings);

// mean pairwise distance; minimal-image on periodic arenas
double mean_iid(const std::vector<Vec2>& positions, const Arena& arena);

// minimal-image pairwise distance matrix (row-major N x N)
std::vector<double> distance_matrix(const std::vector<Vec2>& positions, const Arena& arena);

int count_overlapping(const std::vector<Vec2>& positions, const Arena& arena, double radius);

// printed-formula overlap ratio over a recorded trajectory:
// R_o^sim = (1/(2N)) * sum_i count_i/T * 100, where count_i is the number of
// recorded steps in which agent i overlaps any other agent.
double overlap_ratio(const std::vector<std::vector<Vec2>>& frames, const Arena& arena,
                     double radius);

// convex hull (indices into `points`, counter-clockwise, no collinear interior
// vertices); exposed for tests
std::vector<int> convex_hull(const std::vector<Vec2>& points);

// RCA = 4A/(pi d^2), hull diameter over non-adjacent vertex pairs when the
// hull has > 3 vertices; collinear sets give 0; throws DegenerateInput for N < 3
double circularity(const std::vector<Vec2>& positions);

} // namespace vflock
