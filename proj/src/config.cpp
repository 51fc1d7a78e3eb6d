#include "vflock/config.hpp"

#include <charconv>
#include <cmath>
#include <set>
#include <sstream>

#include "vflock/csvfmt.hpp"
#include "vflock/errors.hpp"

namespace vflock {

namespace {

std::string trim(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

template <typename T>
T parse_num(const std::string& v, int line) {
    T out{};
    const char* first = v.data();
    const char* last = v.data() + v.size();
    auto res = std::from_chars(first, last, out);
    if (res.ec != std::errc{} || res.ptr != last)
        throw ParseError("line " + std::to_string(line) + ": bad numeric value '" + v + "'");
    return out;
}

} // namespace

SimConfig parse_config(const std::string& text) {
    SimConfig c;
    std::set<std::string> seen;
    std::istringstream in(text);
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string s = trim(raw);
        if (s.empty() || s[0] == '#') continue;
        const auto eq = s.find('=');
        if (eq == std::string::npos)
            throw ParseError("line " + std::to_string(line) + ": expected key=value");
        const std::string key = trim(s.substr(0, eq));
        const std::string val = trim(s.substr(eq + 1));
        if (!seen.insert(key).second)
            throw ParseError("line " + std::to_string(line) + ": duplicate key " + key);

        if (key == "ENV_WIDTH") c.arena.width = parse_num<double>(val, line);
        else if (key == "ENV_HEIGHT") c.arena.height = parse_num<double>(val, line);
        else if (key == "VISUAL_FIELD_RESOLUTION") c.params.n_ret = parse_num<int>(val, line);
        else if (key == "RADIUS_AGENT") c.params.radius = parse_num<double>(val, line);
        else if (key == "VF_GAM") c.params.gamma = parse_num<double>(val, line);
        else if (key == "VF_V0") c.params.v0 = parse_num<double>(val, line);
        else if (key == "VF_ALP0") c.params.alpha0 = parse_num<double>(val, line);
        else if (key == "VF_ALP1") c.params.alpha1 = parse_num<double>(val, line);
        else if (key == "VF_BET0") c.params.beta0 = parse_num<double>(val, line);
        else if (key == "VF_BET1") c.params.beta1 = parse_num<double>(val, line);
        else if (key == "AGENT_FOV") {
            // total field of view as a fraction of 2pi; 1.0 = full circle
            const double frac = parse_num<double>(val, line);
            if (!(frac >= 0.0 && frac <= 1.0))
                throw RangeError("AGENT_FOV must be in [0, 1]");
            c.params.fov_half = frac * pi;
        } else if (key == "T") c.t_max = parse_num<long>(val, line);
        else if (key == "N") c.n_agents = parse_num<int>(val, line);
        else if (key == "BOUNDARY") {
            if (val == "torus") c.arena.boundary = Boundary::periodic;
            else if (val == "walls") c.arena.boundary = Boundary::reflective;
            else throw ParseError("line " + std::to_string(line) +
                                  ": BOUNDARY must be torus or walls");
        } else if (key == "VISION_RANGE") c.params.vision_range = parse_num<double>(val, line);
        else if (key == "SEED") c.seed = parse_num<std::uint64_t>(val, line);
        else if (key == "DT") c.dt = parse_num<double>(val, line);
        else if (key == "RECORD_STRIDE") c.record_stride = parse_num<long>(val, line);
        else if (key == "INIT_MODE") {
            if (val == "uniform") c.init_mode = InitMode::uniform;
            else if (val == "polarized") c.init_mode = InitMode::polarized;
            else throw ParseError("line " + std::to_string(line) +
                                  ": INIT_MODE must be uniform or polarized");
        } else {
            throw ParseError("line " + std::to_string(line) + ": unknown key " + key);
        }
    }
    c.validate();
    return c;
}

std::string render_config(const SimConfig& c) {
    // AGENT_FOV round-trips through the fraction representation; pick the
    // neighbouring double that maps back onto fov_half exactly
    double frac = c.params.fov_half / pi;
    if (frac * pi != c.params.fov_half) {
        for (double cand : {std::nextafter(frac, 0.0), std::nextafter(frac, 2.0)}) {
            if (cand * pi == c.params.fov_half) {
                frac = cand;
                break;
            }
        }
    }
    std::string out;
    auto put = [&out](const char* key, auto value) {
        out += key;
        out += '=';
        append_num(out, value);
        out += '\n';
    };
    put("ENV_WIDTH", c.arena.width);
    put("ENV_HEIGHT", c.arena.height);
    put("VISUAL_FIELD_RESOLUTION", c.params.n_ret);
    put("RADIUS_AGENT", c.params.radius);
    put("VF_GAM", c.params.gamma);
    put("VF_V0", c.params.v0);
    put("VF_ALP0", c.params.alpha0);
    put("VF_ALP1", c.params.alpha1);
    put("VF_BET0", c.params.beta0);
    put("VF_BET1", c.params.beta1);
    put("AGENT_FOV", frac);
    put("T", c.t_max);
    put("N", c.n_agents);
    out += c.arena.boundary == Boundary::periodic ? "BOUNDARY=torus\n" : "BOUNDARY=walls\n";
    put("VISION_RANGE", c.params.vision_range);
    put("SEED", c.seed);
    put("DT", c.dt);
    put("RECORD_STRIDE", c.record_stride);
    out += c.init_mode == InitMode::uniform ? "INIT_MODE=uniform\n" : "INIT_MODE=polarized\n";
    return out;
}

} // namespace vflock
