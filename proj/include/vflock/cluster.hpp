#pragma once
#include <vector>

#include "vflock/params.hpp"

namespace vflock {

// Agglomerative hierarchical clustering, Ward linkage, on a condensed
// dissimilarity matrix (same convention as the usual scientific stacks:
// Lance-Williams on squared distances, heights reported as square roots).
struct Merge {
    int a = 0;     // cluster ids; originals are 0..N-1, merges N, N+1, ...
    int b = 0;
    double height = 0.0;
    int size = 0;  // size of the merged cluster
};

// condensed index helper for i < j in an N-point set
inline std::size_t condensed_index(int n, int i, int j) {
    return static_cast<std::size_t>(i) * n - static_cast<std::size_t>(i) * (i + 1) / 2 + j - i - 1;
}

std::vector<Merge> ward_linkage(std::vector<double> condensed, int n);

// flat clusters: apply merges with height <= threshold; labels are 1-based in
// order of first appearance by lowest member index
std::vector<int> cut_tree(const std::vector<Merge>& merges, int n, double threshold);

struct ClusterResult {
    std::vector<int> labels;
    int n_clus_max = 1;
};

// simulation-variant dissimilarity M = ((1 - P_ij) + D^N_ij)/2 with
// P_ij = ||n_i + n_j||/2, D^N = |median(D) - D|/max(D); the median runs over
// the full distance matrix, diagonal zeros included. Ward cut at the threshold
ClusterResult cluster_sim(const std::vector<Vec2>& positions, const std::vector<double>& headings,
                          const Arena& arena, double threshold = 0.275);

// robot-variant dissimilarity M = 1 - sqrt((1 - d/r_max)(n_i . n_j + 1)/2)
ClusterResult cluster_robot(const std::vector<Vec2>& positions, const std::vector<double>& headings,
                            double r_max, double threshold = 0.1653);

// trajectory-wide extent bound r_max = sqrt(range_x^2 + range_y^2)
double trajectory_extent(const std::vector<std::vector<Vec2>>& frames);

} // namespace vflock
