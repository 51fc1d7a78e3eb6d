#pragma once
#include "vflock/params.hpp"

namespace vflock {

// map into [0, W) x [0, H)
Vec2 wrap_periodic(const Vec2& pos, const Arena& arena);

// Reflective walls take precedence over vision: when the tentative position
// leaves the arena, the heading is overridden (psi +pi/2, then -pi/2, then
// +pi as corner fallback) and the displacement is recomputed with the updated
// speed. `state` is the pre-step state, `v_next` the already-updated speed,
// `tentative` the vision-based candidate state.
AgentState reflect_if_needed(const AgentState& state, double v_next,
                             const AgentState& tentative, const Arena& arena, double dt);

} // namespace vflock
