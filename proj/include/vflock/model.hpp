#pragma once
#include <functional>
#include <vector>

#include "vflock/params.hpp"
#include "vflock/retina.hpp"

namespace vflock {

// Eq. of motion pieces. social_forces integrates the binary retina against
// the trigonometric masks: the area term (-V) is short-range repulsion, the
// squared-derivative term is long-range attraction acting at blob edges.

double individual_force(double v, const ModelParams& params);

// forward difference (V[k+1 mod n] - V[k]) / dphi; +-1/dphi at blob edges
std::vector<double> field_derivative(const VisualField& field);

ForcePair social_forces(const VisualField& field, const ModelParams& params);

// synchronous explicit Euler; v and psi update first, displacement uses both
// updated values; psi wrapped to [0, 2pi)
AgentState integrate_step(const AgentState& s, const ForcePair& f, double gamma_dv, double dt);

std::vector<AgentState> integrate_step(const std::vector<AgentState>& states,
                                       const std::vector<ForcePair>& forces,
                                       const ModelParams& params, double dt);

enum class EquilibriumAxis { front_back, left_right };

// Zero crossing (in distance) of dv (front-back) or dpsi (left-right) for a
// two-agent scene supplied by the geometry oracle, bisected over
// d in (2*radius, vision_range). Throws NoSignChange when the force keeps a
// constant sign over the whole bracket.
double find_equilibrium_distance(EquilibriumAxis axis, const ModelParams& params,
                                 const std::function<VisualField(double)>& field_at_distance,
                                 double tol = 1e-6);

// convenience overload building the canonical two-agent geometry internally
double find_equilibrium_distance(EquilibriumAxis axis, const ModelParams& params,
                                 double tol = 1e-6);

} // namespace vflock
