#include "vflock/engine.hpp"

#include <cmath>

#include "vflock/environment.hpp"
#include "vflock/model.hpp"
#include "vflock/perception.hpp"

namespace vflock {

std::vector<AgentState> init_population(const SimConfig& config, Rng& rng) {
    const int n = config.n_agents;
    std::vector<AgentState> states(n);
    for (int i = 0; i < n; ++i) {
        for (;;) {
            states[i].x = rng.uniform(0.0, config.arena.width);
            states[i].y = rng.uniform(0.0, config.arena.height);
            bool coincident = false; // exact duplicates would break perception
            for (int j = 0; j < i; ++j)
                if (states[j].x == states[i].x && states[j].y == states[i].y) {
                    coincident = true;
                    break;
                }
            if (!coincident) break;
        }
    }
    if (config.init_mode == InitMode::polarized) {
        const double common = rng.uniform(0.0, two_pi);
        for (auto& s : states) s.psi = common;
    } else {
        for (auto& s : states) s.psi = rng.uniform(0.0, two_pi);
    }
    for (auto& s : states) s.v = config.params.v0;
    return states;
}

std::vector<AgentState> step(const std::vector<AgentState>& states, const SimConfig& config) {
    const int n = static_cast<int>(states.size());
    const ModelParams& p = config.params;
    std::vector<ForcePair> forces(n);
    for (int i = 0; i < n; ++i)
        forces[i] = social_forces(build_vpf(i, states, config.arena, p), p);

    std::vector<AgentState> next = integrate_step(states, forces, p, config.dt);
    for (int i = 0; i < n; ++i) {
        if (config.arena.boundary == Boundary::periodic) {
            const Vec2 w = wrap_periodic(Vec2{next[i].x, next[i].y}, config.arena);
            next[i].x = w.x;
            next[i].y = w.y;
        } else {
            next[i] = reflect_if_needed(states[i], next[i].v, next[i], config.arena, config.dt);
        }
        // a diverged state would silently corrupt every downstream metric;
        // stop the run instead so sweeps can flag the cell
        if (!(std::isfinite(next[i].x) && std::isfinite(next[i].y) &&
              std::isfinite(next[i].psi) && std::isfinite(next[i].v)))
            throw NumericBlowup("agent state diverged to non-finite values");
    }
    return next;
}

Trajectory run(const SimConfig& config) {
    config.validate();
    Rng rng(config.seed);
    std::vector<AgentState> states = init_population(config, rng);

    Trajectory traj;
    traj.times.push_back(0);
    traj.frames.push_back(states);
    for (long t = 1; t <= config.t_max; ++t) {
        states = step(states, config);
        if (t % config.record_stride == 0) {
            traj.times.push_back(t);
            traj.frames.push_back(states);
        }
    }
    return traj;
}

} // namespace vflock
