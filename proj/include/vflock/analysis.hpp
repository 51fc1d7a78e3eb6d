#pragma once
#include <optional>
#include <vector>

#include "vflock/engine.hpp"
#include "vflock/metrics.hpp"

namespace vflock {

// Per-record metric rows for a trajectory. Metrics needing N >= k are emitted
// as NaN (CSV) / omitted (JSON) below that count rather than aborted.
std::vector<MetricsRecord> compute_metrics(const Trajectory& traj, const Arena& arena,
                                           const ModelParams& params);

struct WindowSummary {
    double window_fraction = 0.25;
    std::size_t first_record = 0;   // first record index inside the window
    std::size_t n_records = 0;
    double P_mean = 0.0, P_std = 0.0;
    double D_mean_mean = 0.0, D_mean_std = 0.0;
    double RCA_mean = 0.0, RCA_std = 0.0;
    double N_clus_max_mean = 0.0, N_clus_max_std = 0.0;
    double N_clus_max_median = 0.0;
    double overlap_ratio = 0.0;     // R_o^sim over the window records
};

// trailing-window aggregates; `mask` (if given) marks records to exclude,
// aligned with the metric rows
WindowSummary summarize_window(const std::vector<MetricsRecord>& rows, int n_agents,
                               double window_fraction,
                               const std::optional<std::vector<bool>>& mask = std::nullopt);

} // namespace vflock
