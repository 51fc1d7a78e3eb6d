#pragma once
#include <vector>

#include "vflock/params.hpp"
#include "vflock/rng.hpp"

namespace vflock {

struct Trajectory {
    std::vector<long> times;                         // recorded timesteps
    std::vector<std::vector<AgentState>> frames;     // one state vector per record

    int n_agents() const { return frames.empty() ? 0 : static_cast<int>(frames.front().size()); }
    std::size_t n_records() const { return frames.size(); }
};

// positions i.i.d. uniform over the arena, headings uniform over [0, 2pi)
// (or all equal for the polarized mode), speeds = v0; coincident positions
// are re-sampled so step 1 cannot hit CoincidentAgents
std::vector<AgentState> init_population(const SimConfig& config, Rng& rng);

// one synchronous step over an immutable snapshot
std::vector<AgentState> step(const std::vector<AgentState>& states, const SimConfig& config);

Trajectory run(const SimConfig& config);

} // namespace vflock
