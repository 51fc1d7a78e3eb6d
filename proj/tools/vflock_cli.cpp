// vflock: vision-based flocking simulator and analysis harness.
// Subcommands: run, sweep, analyze, vpf, plot.
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "vflock/analysis.hpp"
#include "vflock/config.hpp"
#include "vflock/csvfmt.hpp"
#include "vflock/engine.hpp"
#include "vflock/errors.hpp"
#include "vflock/perception.hpp"
#include "vflock/svg.hpp"
#include "vflock/sweep.hpp"
#include "vflock/traj_io.hpp"

namespace fs = std::filesystem;
using namespace vflock;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FormatError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw FormatError("cannot write " + path.string());
    out.write(content.data(), static_cast<std::streamsize>(content.size()));
}

SimConfig load_config(const std::string& path) {
    if (path.empty()) return SimConfig{}; // built-in defaults
    return parse_config(read_file(path));
}

double csv_field(const std::string& line, std::size_t index) {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < index; ++i) {
        pos = line.find(',', pos);
        if (pos == std::string::npos) throw FormatError("missing CSV column");
        ++pos;
    }
    std::size_t end = line.find(',', pos);
    if (end == std::string::npos) end = line.size();
    double v{};
    auto res = std::from_chars(line.data() + pos, line.data() + end, v);
    if (res.ec != std::errc{}) throw FormatError("bad CSV number: " + line.substr(pos, end - pos));
    return v;
}

void emit_sweep_svgs(const SweepResult& result, const fs::path& out_dir) {
    const auto& spec = result.spec;
    const std::size_t na = spec.alpha0_values.size();
    const std::size_t nb = spec.beta0_values.size();
    const std::size_t nf = spec.fov_fractions.size();
    const std::size_t reps = static_cast<std::size_t>(spec.repetitions);

    struct MetricDef {
        const char* name;
        bool unit_scale;
        double (*get)(const WindowSummary&);
    };
    const MetricDef metrics[] = {
        {"P", true, [](const WindowSummary& s) { return s.P_mean; }},
        {"D_mean", false, [](const WindowSummary& s) { return s.D_mean_mean; }},
        {"RCA", true, [](const WindowSummary& s) { return s.RCA_mean; }},
        {"N_clus_max", false, [](const WindowSummary& s) { return s.N_clus_max_mean; }},
        {"R_o_sim", false, [](const WindowSummary& s) { return s.overlap_ratio; }},
    };

    for (std::size_t fi = 0; fi < nf; ++fi) {
        for (const auto& md : metrics) {
            HeatmapGrid grid;
            grid.row_values = spec.alpha0_values;
            grid.col_values = spec.beta0_values;
            grid.cells.assign(na * nb, std::numeric_limits<double>::quiet_NaN());
            grid.metric = md.name;
            for (std::size_t ai = 0; ai < na; ++ai) {
                for (std::size_t bi = 0; bi < nb; ++bi) {
                    double sum = 0.0;
                    std::size_t ok = 0;
                    for (std::size_t rep = 0; rep < reps; ++rep) {
                        const std::size_t idx = ((ai * nb + bi) * nf + fi) * reps + rep;
                        if (result.rows[idx].failed) continue;
                        sum += md.get(result.rows[idx].summary);
                        ++ok;
                    }
                    if (ok > 0) grid.cells[ai * nb + bi] = sum / static_cast<double>(ok);
                }
            }
            const int fov_pct = static_cast<int>(std::lround(spec.fov_fractions[fi] * 100.0));
            grid.title = std::string(md.name) + " (FOV " + std::to_string(fov_pct) + "%)";
            const std::string fname =
                "heatmap_" + std::string(md.name) + "_fov" + std::to_string(fov_pct) + ".svg";
            write_file(out_dir / fname, emit_heatmap(grid, md.unit_scale));
        }
    }
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"vision-based flocking simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir = ".", format = "csv", mask_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    double window = 0.25;
    int workers = 1;

    auto add_common = [&](CLI::App* cmd, bool with_format) {
        cmd->add_option("--config", config_path, "config file (key=value)");
        cmd->add_option_function<std::uint64_t>(
               "--seed", [&](std::uint64_t v) { seed = v; seed_set = true; },
               "master seed override");
        cmd->add_option("--out", out_dir, "output directory");
        cmd->add_option("--window", window, "trailing analysis window fraction")
            ->check(CLI::Range(1e-9, 1.0));
        if (with_format)
            cmd->add_option("--format", format, "trajectory format")
                ->check(CLI::IsMember({"csv", "binary"}));
    };

    auto* cmd_run = app.add_subcommand("run", "single simulation -> trajectory + metrics");
    add_common(cmd_run, true);

    auto* cmd_sweep = app.add_subcommand("sweep", "parameter grid -> CSVs + SVG heatmaps");
    std::vector<double> alpha0s{0.0, 0.5, 1.0, 1.5, 2.0};
    std::vector<double> beta0s{0.0, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> fovs{1.0};
    int reps = 20;
    add_common(cmd_sweep, false);
    cmd_sweep->add_option("--alpha0", alpha0s, "alpha0 grid values")->delimiter(',');
    cmd_sweep->add_option("--beta0", beta0s, "beta0 grid values")->delimiter(',');
    cmd_sweep->add_option("--fov", fovs, "FOV fractions of 2pi")->delimiter(',');
    cmd_sweep->add_option("--reps", reps, "repetitions per cell");
    cmd_sweep->add_option("--workers", workers, "parallel cell workers")->check(CLI::PositiveNumber);

    auto* cmd_analyze = app.add_subcommand("analyze", "trajectory file -> metrics + summary");
    std::string traj_path;
    add_common(cmd_analyze, false);
    cmd_analyze->add_option("file", traj_path, "trajectory file (csv or binary)")->required();
    cmd_analyze->add_option("--mask", mask_path,
                            "step mask file (one 0/1 per record; 1 = exclude from aggregates)");

    auto* cmd_vpf = app.add_subcommand("vpf", "dump one agent's visual field for a scene file");
    std::string scene_path, vpf_out;
    int focal = 0;
    cmd_vpf->add_option("scene", scene_path, "scene file: one 'x y psi' line per agent")
        ->required();
    cmd_vpf->add_option("--config", config_path, "config file (key=value)");
    cmd_vpf->add_option("--focal", focal, "focal agent index");
    cmd_vpf->add_option("--out", vpf_out, "output file (default stdout)");

    auto* cmd_plot = app.add_subcommand("plot", "aggregate sweep CSV -> SVG line plot");
    std::string agg_path, metric = "P", plot_out = "plot.svg";
    double plot_fov = -1.0;
    cmd_plot->add_option("file", agg_path, "aggregate CSV from sweep")->required();
    cmd_plot->add_option("--metric", metric, "column to plot")
        ->check(CLI::IsMember({"P", "D_mean", "RCA", "N_clus_max", "N_clus_med", "R_o_sim"}));
    cmd_plot->add_option("--fov", plot_fov, "FOV fraction to select (default: first in file)");
    cmd_plot->add_option("--out", plot_out, "output SVG path");

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_run->parsed()) {
            SimConfig cfg = load_config(config_path);
            if (seed_set) cfg.seed = seed;
            fs::create_directories(out_dir);
            const Trajectory traj = run(cfg);
            const TrajFormat tf = format == "binary" ? TrajFormat::binary : TrajFormat::csv;
            {
                std::ofstream os(fs::path(out_dir) /
                                     (format == "binary" ? "trajectory.bin" : "trajectory.csv"),
                                 std::ios::binary);
                write_trajectory(os, traj, tf);
            }
            const auto rows = compute_metrics(traj, cfg.arena, cfg.params);
            {
                std::ofstream os(fs::path(out_dir) / "metrics.csv", std::ios::binary);
                write_metrics_csv(os, rows);
            }
            const WindowSummary s = summarize_window(rows, cfg.n_agents, window);
            write_file(fs::path(out_dir) / "summary.json", summary_json(s, cfg.n_agents));
            write_file(fs::path(out_dir) / "config_used.cfg", render_config(cfg));
            std::cout << "run complete: " << traj.n_records() << " records, P_mean="
                      << num_str(s.P_mean) << "\n";
        } else if (cmd_sweep->parsed()) {
            SweepSpec spec;
            spec.base = load_config(config_path);
            if (seed_set) spec.base.seed = seed;
            spec.alpha0_values = alpha0s;
            spec.beta0_values = beta0s;
            spec.fov_fractions = fovs;
            spec.repetitions = reps;
            fs::create_directories(out_dir);
            const SweepResult result = sweep(spec, workers, window);
            write_file(fs::path(out_dir) / "sweep_runs.csv", sweep_detail_csv(result));
            write_file(fs::path(out_dir) / "sweep_cells.csv", sweep_aggregate_csv(result));
            emit_sweep_svgs(result, out_dir);
            std::size_t failed = 0;
            for (const auto& r : result.rows) failed += r.failed ? 1 : 0;
            std::cout << "sweep complete: " << result.rows.size() << " runs, " << failed
                      << " failed\n";
            if (failed > 0) {
                for (const auto& r : result.rows)
                    if (r.failed)
                        std::cerr << "  failed: alpha0=" << r.alpha0 << " beta0=" << r.beta0
                                  << " fov=" << r.fov << " rep=" << r.rep << ": " << r.error
                                  << "\n";
            }
        } else if (cmd_analyze->parsed()) {
            SimConfig cfg = load_config(config_path);
            std::ifstream in(traj_path, std::ios::binary);
            if (!in) throw FormatError("cannot open " + traj_path);
            const Trajectory traj = read_trajectory(in);
            const auto rows = compute_metrics(traj, cfg.arena, cfg.params);
            std::optional<std::vector<bool>> mask;
            if (!mask_path.empty()) {
                std::vector<bool> include;
                for (char ch : read_file(mask_path)) {
                    if (ch == '0') include.push_back(true);   // not flagged -> keep
                    else if (ch == '1') include.push_back(false);
                }
                mask = std::move(include);
            }
            fs::create_directories(out_dir);
            {
                std::ofstream os(fs::path(out_dir) / "metrics.csv", std::ios::binary);
                write_metrics_csv(os, rows);
            }
            const WindowSummary s = summarize_window(rows, traj.n_agents(), window, mask);
            write_file(fs::path(out_dir) / "summary.json", summary_json(s, traj.n_agents()));
            std::cout << "analyze complete: " << rows.size() << " records\n";
        } else if (cmd_vpf->parsed()) {
            SimConfig cfg = load_config(config_path);
            std::vector<AgentState> states;
            std::istringstream in(read_file(scene_path));
            std::string line;
            int lineno = 0;
            while (std::getline(in, line)) {
                ++lineno;
                if (line.empty() || line[0] == '#') continue;
                std::istringstream ls(line);
                AgentState s;
                s.v = cfg.params.v0;
                if (!(ls >> s.x >> s.y >> s.psi))
                    throw FormatError("scene line " + std::to_string(lineno) +
                                      ": expected 'x y psi'");
                states.push_back(s);
            }
            if (states.empty()) throw FormatError("scene file has no agents");
            if (focal < 0 || focal >= static_cast<int>(states.size()))
                throw RangeError("focal index out of range");
            const VisualField field = build_vpf(focal, states, cfg.arena, cfg.params);
            std::string out;
            for (int k = 0; k < field.n(); ++k) {
                append_num(out, k);
                out += ' ';
                out += field.values[k] ? '1' : '0';
                out += '\n';
            }
            if (vpf_out.empty()) std::cout << out;
            else write_file(vpf_out, out);
        } else if (cmd_plot->parsed()) {
            std::istringstream in(read_file(agg_path));
            std::string line;
            if (!std::getline(in, line) ||
                line.rfind("alpha0,beta0,fov,reps_ok,", 0) != 0)
                throw FormatError("not an aggregate sweep CSV: " + agg_path);
            std::size_t col = 4; // P
            if (metric == "D_mean") col = 5;
            else if (metric == "RCA") col = 6;
            else if (metric == "N_clus_max") col = 7;
            else if (metric == "N_clus_med") col = 8;
            else if (metric == "R_o_sim") col = 9;

            struct Row {
                double a0, b0, fov, val;
            };
            std::vector<Row> data;
            while (std::getline(in, line)) {
                if (line.empty()) continue;
                data.push_back({csv_field(line, 0), csv_field(line, 1), csv_field(line, 2),
                                csv_field(line, col)});
            }
            if (data.empty()) throw EmptyGrid("aggregate CSV has no rows");
            if (plot_fov < 0.0) plot_fov = data.front().fov;
            std::vector<PlotSeries> series;
            for (const auto& r : data) {
                if (r.fov != plot_fov) continue;
                auto it = std::find_if(series.begin(), series.end(), [&](const PlotSeries& s) {
                    return s.label == "alpha0=" + num_str(r.a0);
                });
                if (it == series.end()) {
                    series.push_back({"alpha0=" + num_str(r.a0), {}, {}});
                    it = series.end() - 1;
                }
                it->x.push_back(r.b0);
                it->y.push_back(r.val);
            }
            if (series.empty()) throw EmptyGrid("no rows match the requested FOV");
            write_file(plot_out,
                       emit_plot(series, "beta0", metric, metric + " vs beta0"));
            std::cout << "plot written: " << plot_out << "\n";
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
