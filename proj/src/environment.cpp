#include "vflock/environment.hpp"

#include <algorithm>
#include <cmath>

namespace vflock {

Vec2 wrap_periodic(const Vec2& pos, const Arena& arena) {
    auto wrap = [](double c, double span) {
        c = std::fmod(c, span);
        if (c < 0.0) c += span;
        if (c >= span) c = 0.0;
        return c;
    };
    return Vec2{wrap(pos.x, arena.width), wrap(pos.y, arena.height)};
}

AgentState reflect_if_needed(const AgentState& state, double v_next,
                             const AgentState& tentative, const Arena& arena, double dt) {
    const auto inside = [&](double x, double y) {
        return x >= 0.0 && x <= arena.width && y >= 0.0 && y <= arena.height;
    };
    if (inside(tentative.x, tentative.y))
        return tentative;

    // wall override: the speed update stands, only the turn is replaced.
    // Candidate headings in fixed preference order; displacement recomputed
    // with the updated speed from the pre-step position.
    const double candidates[3] = {
        wrap_2pi(state.psi + pi / 2.0),
        wrap_2pi(state.psi - pi / 2.0),
        wrap_2pi(state.psi + pi),
    };
    for (double c : candidates) {
        const double x = state.x + v_next * std::cos(c) * dt;
        const double y = state.y + v_next * std::sin(c) * dt;
        if (inside(x, y)) {
            AgentState out = tentative;
            out.psi = c;
            out.x = x;
            out.y = y;
            return out;
        }
    }
    // pathological corner (speed too large for any quarter-turn): take the
    // reversal and clamp so containment holds unconditionally
    AgentState out = tentative;
    out.psi = candidates[2];
    out.x = std::clamp(state.x + v_next * std::cos(out.psi) * dt, 0.0, arena.width);
    out.y = std::clamp(state.y + v_next * std::sin(out.psi) * dt, 0.0, arena.height);
    return out;
}

} // namespace vflock
