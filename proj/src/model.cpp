#include "vflock/model.hpp"

#include <cmath>

#include "vflock/errors.hpp"
#include "vflock/perception.hpp"

namespace vflock {

double individual_force(double v, const ModelParams& params) {
    return params.gamma * (params.v0 - v);
}

std::vector<double> field_derivative(const VisualField& field) {
    const int n = field.n();
    const double inv_dphi = n / two_pi;
    std::vector<double> d(n);
    for (int k = 0; k < n; ++k) {
        const int jump = int(field.values[(k + 1) % n]) - int(field.values[k]);
        d[k] = jump * inv_dphi;
    }
    return d;
}

// The area term is the midpoint-rule sum of -V against the mask; the
// squared-derivative term acts as unit-weight spikes at blob edges, sampled
// at the pixel edge where the forward difference lives. Summation pairs
// mirror pixels (k, n-1-k) for the area and mirror edges (k, n-2-k) for the
// jumps, with integer pair pre-sums, so reversing the field negates dpsi and
// preserves dv bitwise.
ForcePair social_forces(const VisualField& field, const ModelParams& params) {
    const int n = field.n();
    const auto& m = masks_for(n);
    const auto& V = field.values;
    const double dphi = field.delta_phi();

    double area_cos = 0.0, area_sin = 0.0;
    for (int k = 0; k < n / 2; ++k) {
        const int plus = int(V[k]) + int(V[n - 1 - k]);
        const int minus = int(V[k]) - int(V[n - 1 - k]);
        area_cos += m.cc[k] * plus;
        area_sin += m.sc[k] * minus;
    }

    // unit jumps; (dV/dphi)^2 * dphi^2 = |jump|
    std::vector<int> j2(n);
    for (int k = 0; k < n; ++k)
        j2[k] = std::abs(int(V[(k + 1) % n]) - int(V[k]));

    double edge_cos = 0.0, edge_sin = 0.0;
    for (int k = 0; k + 1 < n / 2; ++k) {
        edge_cos += m.ce[k] * (j2[k] + j2[n - 2 - k]);
        edge_sin += m.se[k] * (j2[k] - j2[n - 2 - k]);
    }
    edge_cos += j2[n / 2 - 1];  // edge at phi = 0, mask exactly +1
    edge_cos -= j2[n - 1];      // edge at the seam, mask exactly -1

    ForcePair f;
    f.dv = params.alpha0 * (params.alpha1 * edge_cos - area_cos * dphi);
    f.dpsi = params.beta0 * (params.beta1 * edge_sin - area_sin * dphi);
    return f;
}

AgentState integrate_step(const AgentState& s, const ForcePair& f, double gamma_dv, double dt) {
    AgentState out;
    out.v = s.v + (f.dv + gamma_dv) * dt;
    out.psi = wrap_2pi(s.psi + f.dpsi * dt);
    out.x = s.x + out.v * std::cos(out.psi) * dt;
    out.y = s.y + out.v * std::sin(out.psi) * dt;
    return out;
}

std::vector<AgentState> integrate_step(const std::vector<AgentState>& states,
                                       const std::vector<ForcePair>& forces,
                                       const ModelParams& params, double dt) {
    std::vector<AgentState> out;
    out.reserve(states.size());
    for (std::size_t i = 0; i < states.size(); ++i)
        out.push_back(integrate_step(states[i], forces[i],
                                     individual_force(states[i].v, params), dt));
    return out;
}

double find_equilibrium_distance(EquilibriumAxis axis, const ModelParams& params,
                                 const std::function<VisualField(double)>& field_at_distance,
                                 double tol) {
    params.validate();
    const double lo = 2.0 * params.radius;
    const double hi = params.vision_range;
    const auto eval = [&](double d) {
        const ForcePair f = social_forces(field_at_distance(d), params);
        return axis == EquilibriumAxis::front_back ? f.dv : f.dpsi;
    };

    // bracket by scanning; the force is piecewise constant in d, so look for
    // a strict sign change between adjacent samples
    const int n_scan = 512;
    double a = 0.0, b = 0.0, fa = 0.0;
    bool found = false;
    double prev_d = lo + (hi - lo) * 1e-9;
    double prev_f = eval(prev_d);
    for (int i = 1; i <= n_scan; ++i) {
        const double d = lo + (hi - lo) * i / n_scan;
        const double fd = eval(d);
        if (prev_f != 0.0 && fd != 0.0 && std::signbit(prev_f) != std::signbit(fd)) {
            a = prev_d;
            fa = prev_f;
            b = d;
            found = true;
            break;
        }
        prev_d = d;
        prev_f = fd;
    }
    if (!found)
        throw NoSignChange("social force keeps a constant sign over (2R_A, vision_range)");

    while (b - a > tol) {
        const double mid = 0.5 * (a + b);
        const double fm = eval(mid);
        if (fm == 0.0 || std::signbit(fm) == std::signbit(fa)) {
            a = mid;
            if (fm != 0.0) fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

double find_equilibrium_distance(EquilibriumAxis axis, const ModelParams& params, double tol) {
    // canonical scene: focal agent heading +x; the neighbour sits dead ahead
    // (front-back) or directly to the left (left-right)
    const double bearing = axis == EquilibriumAxis::front_back ? 0.0 : pi / 2.0;
    auto field_at = [&, bearing](double d) {
        AgentState focal;
        focal.psi = 0.0;
        BlobInterval blob = angular_interval(
            focal, Vec2{d * std::cos(bearing), d * std::sin(bearing)}, params.radius);
        auto kept = limit_fov(apply_visibility_cutoff({blob}, params), params.fov_half);
        return rasterize(kept, params.n_ret);
    };
    return find_equilibrium_distance(axis, params, field_at, tol);
}

} // namespace vflock
