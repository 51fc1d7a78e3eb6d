#pragma once
#include <cstdint>
#include <string>

#include "vflock/errors.hpp"
#include "vflock/geometry.hpp"

namespace vflock {

struct ModelParams {
    double gamma = 0.1;         // speed relaxation rate
    double v0 = 1.0;            // preferred speed (px/ts)
    double alpha0 = 1.0;        // acceleration response amplitude
    double alpha1 = 0.09;       // front-back equilibrium control
    double beta0 = 0.5;         // turning response amplitude
    double beta1 = 0.09;        // left-right equilibrium control
    double radius = 5.5;        // agent half-bodylength R_A (px)
    int n_ret = 320;            // retina resolution (pixels)
    double fov_half = pi;       // phi_L; active FOV is [-phi_L, phi_L]
    double vision_range = 2000; // max detection distance (px)

    void validate() const {
        if (!(gamma > 0.0)) throw RangeError("gamma must be > 0");
        if (n_ret < 4 || n_ret % 2 != 0) throw RangeError("n_ret must be even and >= 4");
        if (!(fov_half >= 0.0 && fov_half <= pi)) throw RangeError("fov_half must be in [0, pi]");
        if (!(radius > 0.0)) throw RangeError("radius must be > 0");
        if (!(vision_range > 0.0)) throw RangeError("vision_range must be > 0");
    }

    bool operator==(const ModelParams&) const = default;
};

enum class Boundary { periodic, reflective };

struct Arena {
    double width = 900.0;
    double height = 900.0;
    Boundary boundary = Boundary::periodic;

    void validate() const {
        if (!(width > 0.0) || !(height > 0.0)) throw RangeError("arena dimensions must be > 0");
    }

    bool operator==(const Arena&) const = default;
};

struct AgentState {
    double x = 0.0;
    double y = 0.0;
    double psi = 0.0; // heading, kept in [0, 2pi)
    double v = 0.0;   // signed speed (px/ts); may go negative
};

struct ForcePair {
    double dv = 0.0;   // px/ts^2
    double dpsi = 0.0; // rad/ts
};

enum class InitMode { uniform, polarized };

struct SimConfig {
    ModelParams params;
    Arena arena;
    int n_agents = 10;
    long t_max = 20000;
    double dt = 1.0;
    std::uint64_t seed = 0;
    long record_stride = 20;
    InitMode init_mode = InitMode::uniform;

    void validate() const {
        params.validate();
        arena.validate();
        if (n_agents < 1) throw RangeError("n_agents must be >= 1");
        if (t_max < 1) throw RangeError("t_max must be >= 1");
        if (!(dt > 0.0)) throw RangeError("dt must be > 0");
        if (record_stride < 1) throw RangeError("record_stride must be >= 1");
    }

    bool operator==(const SimConfig&) const = default;
};

} // namespace vflock
