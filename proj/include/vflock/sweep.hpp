#pragma once
#include <string>
#include <vector>

#include "vflock/analysis.hpp"
#include "vflock/params.hpp"

namespace vflock {

struct SweepSpec {
    std::vector<double> alpha0_values;
    std::vector<double> beta0_values;
    std::vector<double> fov_fractions;  // of the full 2pi
    int repetitions = 20;
    SimConfig base;

    void validate() const;
};

struct CellResult {
    double alpha0 = 0.0, beta0 = 0.0, fov = 0.0;
    int rep = 0;
    bool failed = false;
    std::string error;
    WindowSummary summary;
};

struct SweepResult {
    SweepSpec spec;
    std::vector<CellResult> rows;   // |a0| * |b0| * |fov| * reps, grid order
};

// runs every (alpha0, beta0, fov, rep) with seeds derived from
// (base.seed, flat run index); `workers` threads; output order is by grid
// index regardless of completion order; per-cell failures are flagged rows
SweepResult sweep(const SweepSpec& spec, int workers, double window_fraction);

std::string sweep_detail_csv(const SweepResult& result);
std::string sweep_aggregate_csv(const SweepResult& result);  // mean over reps per cell

} // namespace vflock
