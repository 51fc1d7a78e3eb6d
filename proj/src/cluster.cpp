#include "vflock/cluster.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "vflock/errors.hpp"
#include "vflock/metrics.hpp"

namespace vflock {

namespace {

// union-find for the relabeling pass
struct UnionFind {
    std::vector<int> parent, id;
    explicit UnionFind(int n) : parent(n), id(n) {
        std::iota(parent.begin(), parent.end(), 0);
        std::iota(id.begin(), id.end(), 0);
    }
    int find(int x) {
        int r = x;
        while (parent[r] != r) r = parent[r];
        while (parent[x] != r) {
            const int nx = parent[x];
            parent[x] = r;
            x = nx;
        }
        return r;
    }
};

} // namespace

// NN-chain agglomeration with the Ward update; O(n^2) time. Works on squared
// dissimilarities internally, reports heights as square roots (the convention
// of the common scientific stacks). Merges are height-sorted afterwards and
// relabeled so cluster n+s is the one created by sorted step s.
std::vector<Merge> ward_linkage(std::vector<double> condensed, int n) {
    if (n < 1) throw DegenerateInput("ward_linkage on an empty set");
    const std::size_t want = static_cast<std::size_t>(n) * (n - 1) / 2;
    if (condensed.size() != want)
        throw RangeError("ward_linkage: condensed size does not match point count");

    for (double& v : condensed) v *= v;
    auto d2 = [&](int i, int j) -> double& {
        return i < j ? condensed[condensed_index(n, i, j)] : condensed[condensed_index(n, j, i)];
    };

    std::vector<int> size(n, 1);
    std::vector<bool> active(n, true);

    struct RawMerge {
        int a, b;       // slot indices at merge time
        double cost2;   // squared Ward cost
    };
    std::vector<RawMerge> raw;
    raw.reserve(n - 1);

    std::vector<int> chain;
    chain.reserve(n);
    int n_active = n;
    while (n_active > 1) {
        if (chain.size() < 2) {
            chain.clear();
            for (int i = 0; i < n; ++i)
                if (active[i]) {
                    chain.push_back(i);
                    break;
                }
        }
        // grow the chain until a reciprocal nearest-neighbour pair appears
        for (;;) {
            const int a = chain.back();
            const int prev = chain.size() >= 2 ? chain[chain.size() - 2] : -1;
            int best = prev;
            double best_d = prev >= 0 ? d2(a, prev) : std::numeric_limits<double>::infinity();
            for (int j = 0; j < n; ++j) {
                if (!active[j] || j == a) continue;
                if (d2(a, j) < best_d) {
                    best_d = d2(a, j);
                    best = j;
                }
            }
            if (best == prev && prev >= 0) break; // reciprocal pair (a, prev)
            chain.push_back(best);
        }
        const int a = chain.back();
        const int b = chain[chain.size() - 2];
        chain.pop_back();
        chain.pop_back();

        const double cost2 = d2(a, b);
        const int lo = std::min(a, b), hi = std::max(a, b);
        const int sa = size[a], sb = size[b];
        // Lance-Williams (Ward) in squared distances
        for (int k = 0; k < n; ++k) {
            if (!active[k] || k == a || k == b) continue;
            const double dk = ((sa + size[k]) * d2(a, k) + (sb + size[k]) * d2(b, k) -
                               size[k] * cost2) /
                              (sa + sb + size[k]);
            d2(lo, k) = dk;
        }
        active[hi] = false;
        size[lo] = sa + sb;
        raw.push_back({a, b, cost2});
        --n_active;
    }

    // stable sort by cost keeps the chain's merge order on ties
    std::vector<int> order(raw.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return raw[x].cost2 < raw[y].cost2; });

    // assign final cluster ids in sorted order via union-find over slots
    UnionFind uf(n);
    std::vector<Merge> out;
    out.reserve(raw.size());
    std::vector<int> out_size(n, 1);
    for (std::size_t s = 0; s < order.size(); ++s) {
        const RawMerge& rm = raw[order[s]];
        const int ra = uf.find(rm.a), rb = uf.find(rm.b);
        Merge m;
        m.a = std::min(uf.id[ra], uf.id[rb]);
        m.b = std::max(uf.id[ra], uf.id[rb]);
        m.height = std::sqrt(rm.cost2);
        m.size = out_size[ra] + out_size[rb];
        // merge rb into ra's slot, give it the fresh id
        uf.parent[rb] = ra;
        uf.id[ra] = n + static_cast<int>(s);
        out_size[ra] = m.size;
        out.push_back(m);
    }
    return out;
}

std::vector<int> cut_tree(const std::vector<Merge>& merges, int n, double threshold) {
    // replay merges with height <= threshold over the original indices
    const int total = n + static_cast<int>(merges.size());
    std::vector<int> parent(total);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&parent](int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };
    for (std::size_t s = 0; s < merges.size(); ++s) {
        if (merges[s].height <= threshold) {
            const int id = n + static_cast<int>(s);
            parent[find(merges[s].a)] = find(id);
            parent[find(merges[s].b)] = find(id);
        }
    }
    // labels 1-based in order of first appearance by lowest member index
    std::vector<int> labels(n, 0);
    std::vector<int> root_label(total, 0);
    int next = 1;
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (root_label[r] == 0) root_label[r] = next++;
        labels[i] = root_label[r];
    }
    return labels;
}

static ClusterResult cut_to_result(const std::vector<Merge>& merges, int n, double threshold) {
    ClusterResult res;
    res.labels = cut_tree(merges, n, threshold);
    std::vector<int> counts(n + 1, 0);
    for (int l : res.labels) ++counts[l];
    res.n_clus_max = *std::max_element(counts.begin(), counts.end());
    return res;
}

ClusterResult cluster_sim(const std::vector<Vec2>& positions, const std::vector<double>& headings,
                          const Arena& arena, double threshold) {
    const int n = static_cast<int>(positions.size());
    if (n < 2) throw DegenerateInput("cluster_sim needs at least two agents");

    const std::vector<double> D = distance_matrix(positions, arena);
    const double dmax = *std::max_element(D.begin(), D.end());
    if (dmax == 0.0) {
        // all agents coincident: a single cluster of size n, directly
        ClusterResult res;
        res.labels.assign(n, 1);
        res.n_clus_max = n;
        return res;
    }
    // median over the whole matrix, diagonal zeros included
    std::vector<double> tmp = D;
    std::nth_element(tmp.begin(), tmp.begin() + tmp.size() / 2, tmp.end());
    double median = tmp[tmp.size() / 2];
    if (tmp.size() % 2 == 0) {
        const double upper = median;
        std::nth_element(tmp.begin(), tmp.begin() + tmp.size() / 2 - 1, tmp.end());
        median = 0.5 * (tmp[tmp.size() / 2 - 1] + upper);
    }

    std::vector<double> M(static_cast<std::size_t>(n) * (n - 1) / 2);
    std::size_t c = 0;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j, ++c) {
            const double pij =
                0.5 * std::hypot(std::cos(headings[i]) + std::cos(headings[j]),
                                 std::sin(headings[i]) + std::sin(headings[j]));
            const double dn = std::abs(median - D[static_cast<std::size_t>(i) * n + j]) / dmax;
            M[c] = 0.5 * ((1.0 - pij) + dn);
        }
    }
    return cut_to_result(ward_linkage(std::move(M), n), n, threshold);
}

ClusterResult cluster_robot(const std::vector<Vec2>& positions, const std::vector<double>& headings,
                            double r_max, double threshold) {
    const int n = static_cast<int>(positions.size());
    if (!(r_max > 0.0)) throw DegenerateInput("cluster_robot needs a positive trajectory extent");
    std::vector<double> M;
    M.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const double d = dist(positions[i], positions[j]);
            const double align = 0.5 * (std::cos(headings[i]) * std::cos(headings[j]) +
                                        std::sin(headings[i]) * std::sin(headings[j]) + 1.0);
            const double radial = std::max(0.0, 1.0 - d / r_max);
            M.push_back(1.0 - std::sqrt(radial * align));
        }
    }
    return cut_to_result(ward_linkage(std::move(M), n), n, threshold);
}

double trajectory_extent(const std::vector<std::vector<Vec2>>& frames) {
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    for (const auto& frame : frames) {
        for (const auto& p : frame) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    if (!(xmax >= xmin)) return 0.0; // empty input
    return std::hypot(xmax - xmin, ymax - ymin);
}

} // namespace vflock
