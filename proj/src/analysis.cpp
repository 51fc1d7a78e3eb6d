#include "vflock/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "vflock/cluster.hpp"
#include "vflock/errors.hpp"

namespace vflock {

std::vector<MetricsRecord> compute_metrics(const Trajectory& traj, const Arena& arena,
                                           const ModelParams& params) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    std::vector<MetricsRecord> rows;
    rows.reserve(traj.n_records());
    for (std::size_t r = 0; r < traj.n_records(); ++r) {
        const auto& frame = traj.frames[r];
        const int n = static_cast<int>(frame.size());
        std::vector<Vec2> pos(n);
        std::vector<double> psi(n);
        for (int i = 0; i < n; ++i) {
            pos[i] = Vec2{frame[i].x, frame[i].y};
            psi[i] = frame[i].psi;
        }
        MetricsRecord rec;
        rec.t = traj.times[r];
        rec.P = polarization(psi);
        rec.D_mean = n >= 2 ? mean_iid(pos, arena) : nan;
        rec.RCA = n >= 3 ? circularity(pos) : nan;
        rec.N_clus_max = n >= 2 ? cluster_sim(pos, psi, arena).n_clus_max : 1;
        rec.overlap_count = count_overlapping(pos, arena, params.radius);
        rows.push_back(rec);
    }
    return rows;
}

WindowSummary summarize_window(const std::vector<MetricsRecord>& rows, int n_agents,
                               double window_fraction,
                               const std::optional<std::vector<bool>>& mask) {
    if (rows.empty()) throw DegenerateInput("summarize_window on empty metric rows");
    if (!(window_fraction > 0.0 && window_fraction <= 1.0))
        throw RangeError("window fraction must be in (0, 1]");
    if (mask && mask->size() != rows.size())
        throw RangeError("step mask length does not match metric rows");

    WindowSummary s;
    s.window_fraction = window_fraction;
    const std::size_t nrec = rows.size();
    s.first_record = static_cast<std::size_t>(
        std::ceil(static_cast<double>(nrec) * (1.0 - window_fraction)));
    if (s.first_record >= nrec) s.first_record = nrec - 1;

    // one pass per statistic; NaN metric values (undefined at small N) keep
    // their aggregate NaN, which the JSON writer then omits
    double sums[4] = {0, 0, 0, 0}, sqs[4] = {0, 0, 0, 0};
    long overlap_total = 0;
    std::size_t m = 0;
    std::vector<int> nclus_vals;
    for (std::size_t r = s.first_record; r < nrec; ++r) {
        if (mask && !(*mask)[r]) continue;
        const double vals[4] = {rows[r].P, rows[r].D_mean, rows[r].RCA,
                                static_cast<double>(rows[r].N_clus_max)};
        for (int k = 0; k < 4; ++k) {
            sums[k] += vals[k];
            sqs[k] += vals[k] * vals[k];
        }
        overlap_total += rows[r].overlap_count;
        nclus_vals.push_back(rows[r].N_clus_max);
        ++m;
    }
    s.n_records = m;
    if (m == 0) throw DegenerateInput("step mask excludes every window record");

    auto mean_of = [&](int k) { return sums[k] / static_cast<double>(m); };
    auto std_of = [&](int k) {
        const double mu = mean_of(k);
        const double var = sqs[k] / static_cast<double>(m) - mu * mu;
        return std::sqrt(var > 0.0 ? var : 0.0);
    };
    s.P_mean = mean_of(0);
    s.P_std = std_of(0);
    s.D_mean_mean = mean_of(1);
    s.D_mean_std = std_of(1);
    s.RCA_mean = mean_of(2);
    s.RCA_std = std_of(2);
    s.N_clus_max_mean = mean_of(3);
    s.N_clus_max_std = std_of(3);
    std::nth_element(nclus_vals.begin(), nclus_vals.begin() + m / 2, nclus_vals.end());
    s.N_clus_max_median = nclus_vals[m / 2];
    if (m % 2 == 0) {
        const double upper = s.N_clus_max_median;
        std::nth_element(nclus_vals.begin(), nclus_vals.begin() + m / 2 - 1, nclus_vals.end());
        s.N_clus_max_median = 0.5 * (nclus_vals[m / 2 - 1] + upper);
    }
    s.overlap_ratio = 100.0 * static_cast<double>(overlap_total) /
                      (2.0 * n_agents * static_cast<double>(m));
    return s;
}

} // namespace vflock
