#include "vflock/sweep.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "vflock/csvfmt.hpp"
#include "vflock/engine.hpp"
#include "vflock/errors.hpp"

namespace vflock {

void SweepSpec::validate() const {
    if (alpha0_values.empty() || beta0_values.empty() || fov_fractions.empty())
        throw RangeError("sweep value lists must be non-empty");
    if (repetitions < 1) throw RangeError("sweep repetitions must be >= 1");
    for (double f : fov_fractions)
        if (!(f >= 0.0 && f <= 1.0)) throw RangeError("fov fractions must be in [0, 1]");
    base.validate();
}

SweepResult sweep(const SweepSpec& spec, int workers, double window_fraction) {
    spec.validate();
    const std::size_t na = spec.alpha0_values.size();
    const std::size_t nb = spec.beta0_values.size();
    const std::size_t nf = spec.fov_fractions.size();
    const std::size_t reps = static_cast<std::size_t>(spec.repetitions);
    const std::size_t total = na * nb * nf * reps;

    SweepResult result;
    result.spec = spec;
    result.rows.resize(total);

    std::atomic<std::size_t> cursor{0};
    auto work = [&]() {
        for (;;) {
            const std::size_t idx = cursor.fetch_add(1);
            if (idx >= total) return;
            // flat index -> (a, b, f, rep), rep fastest
            std::size_t rem = idx;
            const std::size_t rep = rem % reps;
            rem /= reps;
            const std::size_t fi = rem % nf;
            rem /= nf;
            const std::size_t bi = rem % nb;
            const std::size_t ai = rem / nb;

            CellResult& row = result.rows[idx];
            row.alpha0 = spec.alpha0_values[ai];
            row.beta0 = spec.beta0_values[bi];
            row.fov = spec.fov_fractions[fi];
            row.rep = static_cast<int>(rep);
            try {
                SimConfig cfg = spec.base;
                cfg.params.alpha0 = row.alpha0;
                cfg.params.beta0 = row.beta0;
                cfg.params.fov_half = row.fov * pi;
                cfg.seed = derive_seed(spec.base.seed, idx);
                const Trajectory traj = run(cfg);
                const auto rows = compute_metrics(traj, cfg.arena, cfg.params);
                row.summary = summarize_window(rows, cfg.n_agents, window_fraction);
            } catch (const std::exception& e) {
                row.failed = true;
                row.error = e.what();
            }
        }
    };

    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }
    return result;
}

static void append_cell_value(std::string& buf, bool failed, double v) {
    if (failed) buf += "nan";
    else append_num(buf, v);
}

std::string sweep_detail_csv(const SweepResult& result) {
    std::string buf = "alpha0,beta0,fov,rep,P,D_mean,RCA,N_clus_max,N_clus_med,R_o_sim,status\n";
    for (const auto& r : result.rows) {
        append_num(buf, r.alpha0);
        buf += ',';
        append_num(buf, r.beta0);
        buf += ',';
        append_num(buf, r.fov);
        buf += ',';
        append_num(buf, r.rep);
        buf += ',';
        append_cell_value(buf, r.failed, r.summary.P_mean);
        buf += ',';
        append_cell_value(buf, r.failed, r.summary.D_mean_mean);
        buf += ',';
        append_cell_value(buf, r.failed, r.summary.RCA_mean);
        buf += ',';
        append_cell_value(buf, r.failed, r.summary.N_clus_max_mean);
        buf += ',';
        append_cell_value(buf, r.failed, r.summary.N_clus_max_median);
        buf += ',';
        append_cell_value(buf, r.failed, r.summary.overlap_ratio);
        buf += ',';
        buf += r.failed ? "failed" : "ok";
        buf += '\n';
    }
    return buf;
}

std::string sweep_aggregate_csv(const SweepResult& result) {
    const std::size_t reps = static_cast<std::size_t>(result.spec.repetitions);
    std::string buf = "alpha0,beta0,fov,reps_ok,P,D_mean,RCA,N_clus_max,N_clus_med,R_o_sim\n";
    for (std::size_t base = 0; base < result.rows.size(); base += reps) {
        double sums[6] = {0, 0, 0, 0, 0, 0};
        std::size_t ok = 0;
        for (std::size_t r = base; r < base + reps; ++r) {
            const CellResult& row = result.rows[r];
            if (row.failed) continue;
            sums[0] += row.summary.P_mean;
            sums[1] += row.summary.D_mean_mean;
            sums[2] += row.summary.RCA_mean;
            sums[3] += row.summary.N_clus_max_mean;
            sums[4] += row.summary.N_clus_max_median;
            sums[5] += row.summary.overlap_ratio;
            ++ok;
        }
        const CellResult& head = result.rows[base];
        append_num(buf, head.alpha0);
        buf += ',';
        append_num(buf, head.beta0);
        buf += ',';
        append_num(buf, head.fov);
        buf += ',';
        append_num(buf, static_cast<long>(ok));
        for (double s : sums) {
            buf += ',';
            if (ok == 0) buf += "nan";
            else append_num(buf, s / static_cast<double>(ok));
        }
        buf += '\n';
    }
    return buf;
}

} // namespace vflock
