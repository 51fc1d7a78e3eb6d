#include "vflock/traj_io.hpp"

#include <charconv>
#include <cmath>
#include <cstring>
#include <istream>
#include <ostream>

#include "vflock/csvfmt.hpp"
#include "vflock/errors.hpp"

#include <json.hpp>

namespace vflock {

namespace {

constexpr char kMagic[4] = {'V', 'F', 'T', 'J'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void put_raw(std::ostream& os, T v) {
    // fixed little-endian layout; the build targets little-endian hosts
    os.write(reinterpret_cast<const char*>(&v), sizeof v);
}

template <typename T>
T get_raw(std::istream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof v);
    if (!is) throw FormatError("binary trajectory truncated");
    return v;
}

double parse_double_field(const std::string& s, std::size_t& pos) {
    const auto comma = s.find(',', pos);
    const std::size_t end = comma == std::string::npos ? s.size() : comma;
    double out{};
    auto res = std::from_chars(s.data() + pos, s.data() + end, out);
    if (res.ec != std::errc{} || res.ptr != s.data() + end)
        throw FormatError("bad numeric field in trajectory CSV: '" + s.substr(pos, end - pos) + "'");
    pos = comma == std::string::npos ? s.size() : comma + 1;
    return out;
}

} // namespace

void write_trajectory(std::ostream& os, const Trajectory& traj, TrajFormat format) {
    if (format == TrajFormat::csv) {
        std::string buf = "t,agent_id,x,y,psi,v\n";
        for (std::size_t r = 0; r < traj.n_records(); ++r) {
            for (std::size_t i = 0; i < traj.frames[r].size(); ++i) {
                const AgentState& s = traj.frames[r][i];
                append_num(buf, traj.times[r]);
                buf += ',';
                append_num(buf, static_cast<long>(i));
                buf += ',';
                append_num(buf, s.x);
                buf += ',';
                append_num(buf, s.y);
                buf += ',';
                append_num(buf, s.psi);
                buf += ',';
                append_num(buf, s.v);
                buf += '\n';
            }
        }
        os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
        return;
    }
    os.write(kMagic, 4);
    put_raw(os, kVersion);
    put_raw(os, static_cast<std::uint32_t>(traj.n_agents()));
    put_raw(os, static_cast<std::uint64_t>(traj.n_records()));
    for (std::size_t r = 0; r < traj.n_records(); ++r) {
        put_raw(os, static_cast<std::int64_t>(traj.times[r]));
        for (const AgentState& s : traj.frames[r]) {
            put_raw(os, s.x);
            put_raw(os, s.y);
            put_raw(os, s.psi);
            put_raw(os, s.v);
        }
    }
}

static Trajectory read_trajectory_csv(std::istream& is, const std::string& header) {
    if (header != "t,agent_id,x,y,psi,v")
        throw FormatError("unexpected trajectory CSV header: '" + header + "'");
    Trajectory traj;
    std::string line;
    long expect_id = 0;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        std::size_t pos = 0;
        const double t = parse_double_field(line, pos);
        const double id = parse_double_field(line, pos);
        AgentState s;
        s.x = parse_double_field(line, pos);
        s.y = parse_double_field(line, pos);
        s.psi = parse_double_field(line, pos);
        s.v = parse_double_field(line, pos);
        const long tl = static_cast<long>(t);
        if (traj.times.empty() || tl != traj.times.back()) {
            if (!traj.times.empty()) {
                if (tl <= traj.times.back())
                    throw FormatError("trajectory timesteps not strictly increasing");
                if (traj.frames.back().size() != traj.frames.front().size())
                    throw FormatError("agent count varies across records");
            }
            traj.times.push_back(tl);
            traj.frames.emplace_back();
            expect_id = 0;
        }
        if (static_cast<long>(id) != expect_id)
            throw FormatError("agent ids out of order in trajectory CSV");
        ++expect_id;
        traj.frames.back().push_back(s);
    }
    if (traj.frames.empty()) throw FormatError("empty trajectory");
    if (traj.frames.back().size() != traj.frames.front().size())
        throw FormatError("agent count varies across records");
    return traj;
}

Trajectory read_trajectory(std::istream& is) {
    char head[4] = {0, 0, 0, 0};
    is.read(head, 4);
    if (!is || is.gcount() < 4) throw FormatError("trajectory file too short");
    if (std::memcmp(head, kMagic, 4) == 0) {
        const auto version = get_raw<std::uint32_t>(is);
        if (version != kVersion)
            throw FormatError("unsupported trajectory version " + std::to_string(version));
        const auto n_agents = get_raw<std::uint32_t>(is);
        const auto n_records = get_raw<std::uint64_t>(is);
        Trajectory traj;
        traj.times.reserve(n_records);
        traj.frames.reserve(n_records);
        for (std::uint64_t r = 0; r < n_records; ++r) {
            traj.times.push_back(static_cast<long>(get_raw<std::int64_t>(is)));
            std::vector<AgentState> frame(n_agents);
            for (auto& s : frame) {
                s.x = get_raw<double>(is);
                s.y = get_raw<double>(is);
                s.psi = get_raw<double>(is);
                s.v = get_raw<double>(is);
            }
            traj.frames.push_back(std::move(frame));
        }
        return traj;
    }
    // CSV: re-assemble the header line from the 4 sniffed bytes
    std::string header(head, 4);
    std::string rest;
    if (!std::getline(is, rest)) throw FormatError("trajectory file too short");
    if (!rest.empty() && rest.back() == '\r') rest.pop_back();
    header += rest;
    return read_trajectory_csv(is, header);
}

void write_metrics_csv(std::ostream& os, const std::vector<MetricsRecord>& rows) {
    std::string buf = "t,P,D_mean,RCA,N_clus_max,overlap_count\n";
    for (const auto& r : rows) {
        append_num(buf, r.t);
        buf += ',';
        append_num(buf, r.P);
        buf += ',';
        append_num(buf, r.D_mean);
        buf += ',';
        append_num(buf, r.RCA);
        buf += ',';
        append_num(buf, r.N_clus_max);
        buf += ',';
        append_num(buf, r.overlap_count);
        buf += '\n';
    }
    os.write(buf.data(), static_cast<std::streamsize>(buf.size()));
}

std::string summary_json(const WindowSummary& s, int n_agents) {
    nlohmann::ordered_json j;
    j["n_agents"] = n_agents;
    j["window_fraction"] = s.window_fraction;
    j["first_record"] = s.first_record;
    j["records"] = s.n_records;
    auto put_stat = [&](const char* name, double mean, double sd) {
        if (!std::isfinite(mean)) return; // undefined below the metric's minimum N
        j[name] = {{"mean", mean}, {"std", sd}};
    };
    put_stat("P", s.P_mean, s.P_std);
    put_stat("D_mean", s.D_mean_mean, s.D_mean_std);
    put_stat("RCA", s.RCA_mean, s.RCA_std);
    put_stat("N_clus_max", s.N_clus_max_mean, s.N_clus_max_std);
    if (std::isfinite(s.N_clus_max_mean)) j["N_clus_max"]["median"] = s.N_clus_max_median;
    j["R_o_sim"] = s.overlap_ratio;
    return j.dump(2) + "\n";
}

} // namespace vflock
