#pragma once
#include <string>

#include "vflock/params.hpp"

namespace vflock {

// key=value config with exactly the published variable names plus the
// harness keys SEED, DT, RECORD_STRIDE, INIT_MODE. Unknown keys are rejected
// with the offending line number. AGENT_FOV is the total field of view as a
// fraction of 2pi (1.0 = full circle), BOUNDARY is torus|walls.
SimConfig parse_config(const std::string& text);

// inverse of parse_config: parse_config(render_config(c)) == c
std::string render_config(const SimConfig& config);

} // namespace vflock
