#pragma once
#include <iosfwd>
#include <string>

#include "vflock/analysis.hpp"
#include "vflock/engine.hpp"

namespace vflock {

enum class TrajFormat { csv, binary };

// CSV: header t,agent_id,x,y,psi,v; one row per (record, agent).
// Binary: magic "VFTJ", u32 version, u32 n_agents, u64 n_records, then per
// record an i64 t and n_agents * 4 doubles (x, y, psi, v), little-endian.
void write_trajectory(std::ostream& os, const Trajectory& traj, TrajFormat format);
Trajectory read_trajectory(std::istream& is);   // sniffs the format

void write_metrics_csv(std::ostream& os, const std::vector<MetricsRecord>& rows);

std::string summary_json(const WindowSummary& s, int n_agents);

} // namespace vflock
