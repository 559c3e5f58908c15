#include <filesystem>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "netevo/config.hpp"
#include "netevo/engine.hpp"
#include "netevo/io.hpp"
#include "netevo/svg.hpp"

namespace {

namespace fs = std::filesystem;

struct SeedOption {
    std::uint64_t value = 0;
    bool given = false;
};

void add_seed_flag(CLI::App* cmd, SeedOption& seed)
{
    cmd->add_option_function<std::uint64_t>(
        "--seed",
        [&seed](std::uint64_t v) {
            seed.value = v;
            seed.given = true;
        },
        "Override the config seed");
}

// Resolves the run seed: flag > config file > freshly generated (printed).
void resolve_seed(netevo::ParsedConfig& parsed, const SeedOption& flag)
{
    if (flag.given) {
        parsed.config.seed = flag.value;
        return;
    }
    const bool defaulted = std::any_of(
        parsed.applied_defaults.begin(), parsed.applied_defaults.end(),
        [](const std::string& d) { return d.rfind("seed =", 0) == 0; });
    if (defaulted) {
        std::random_device rd;
        parsed.config.seed = (static_cast<std::uint64_t>(rd()) << 32) | rd();
        std::cout << "generated seed = " << parsed.config.seed << "\n";
    }
}

void report_defaults(const netevo::ParsedConfig& parsed)
{
    for (const auto& d : parsed.applied_defaults)
        std::cerr << "config default applied: " << d << "\n";
}

std::vector<double> parse_grid(const std::string& spec)
{
    double lo, hi;
    int n;
    char c1, c2;
    std::istringstream in(spec);
    if (!(in >> lo >> c1 >> hi >> c2 >> n) || c1 != ':' || c2 != ':' || n < 1)
        throw std::runtime_error("bad grid spec '" + spec + "', expected lo:hi:n");
    std::vector<double> values;
    for (int i = 0; i < n; ++i)
        values.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    return values;
}

void write_run_outputs(const fs::path& out_dir, const netevo::SimConfig& config,
                       const netevo::RunRecord& record)
{
    fs::create_directories(out_dir);
    netevo::write_file((out_dir / "timeseries.csv").string(), netevo::timeseries_csv(record));
    netevo::write_file((out_dir / "summary.json").string(),
                       netevo::summary_json(config, record));
    for (const auto& snap : record.snapshots) {
        const std::string tag = "snapshot_" + std::to_string(snap.step);
        netevo::write_file((out_dir / (tag + "_nodes.csv")).string(),
                           netevo::snapshot_nodes_csv(snap));
        netevo::write_file((out_dir / (tag + "_edges.csv")).string(),
                           netevo::snapshot_edges_csv(snap));
    }
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Co-evolving network simulator: Q-learning agents on a grid playing matrix "
                 "games under an M/G/inf birth-death process"};
    app.require_subcommand(1);

    std::string config_path, out_dir, edges_path;
    std::string delta_grid = "0:1:6", r_grid = "0:1:6";
    int replicas = 10;
    int pmf_from = 0, pmf_to = -1;
    SeedOption seed;

    auto* simulate = app.add_subcommand("simulate", "Run one simulation");
    simulate->add_option("--config", config_path, "Config file (JSON)")->required();
    simulate->add_option("--out", out_dir, "Output directory")->required();
    add_seed_flag(simulate, seed);

    auto* sweep_cmd = app.add_subcommand("sweep", "Replicated (delta, r) heat-map sweep");
    sweep_cmd->add_option("--config", config_path, "Config file (JSON)")->required();
    sweep_cmd->add_option("--out", out_dir, "Output directory")->required();
    sweep_cmd->add_option("--delta-grid", delta_grid, "delta grid as lo:hi:n");
    sweep_cmd->add_option("--r-grid", r_grid, "r grid as lo:hi:n");
    sweep_cmd->add_option("--replicas", replicas, "Independent runs per cell");
    add_seed_flag(sweep_cmd, seed);

    auto* heuristic = app.add_subcommand("heuristic", "Run the non-learning baseline");
    heuristic->add_option("--config", config_path, "Config file (JSON)")->required();
    heuristic->add_option("--out", out_dir, "Output directory")->required();
    add_seed_flag(heuristic, seed);

    auto* theory = app.add_subcommand("theory", "Closed-form steady-state results");
    theory->add_option("--config", config_path, "Config file (JSON)")->required();
    theory->add_option("--out", out_dir, "Optional output directory for pmf.csv");
    theory->add_option("--pmf-from", pmf_from, "First population count of the pmf range");
    theory->add_option("--pmf-to", pmf_to, "Last population count (default mean + 5 sd)");

    auto* metrics = app.add_subcommand("metrics", "Structure metrics of an edge-list snapshot");
    metrics->add_option("--edges", edges_path, "Edge list csv (src_id,dst_id,weight)")
        ->required();
    metrics->add_option("--out", out_dir, "Output directory")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (simulate->parsed() || heuristic->parsed()) {
            netevo::ParsedConfig parsed = netevo::parse_config(config_path);
            report_defaults(parsed);
            resolve_seed(parsed, seed);
            const netevo::RunResult result = simulate->parsed()
                ? netevo::run(parsed.config)
                : netevo::run_heuristic(parsed.config);
            write_run_outputs(out_dir, parsed.config, result.record);
        } else if (sweep_cmd->parsed()) {
            netevo::ParsedConfig parsed = netevo::parse_config(config_path);
            report_defaults(parsed);
            resolve_seed(parsed, seed);
            const auto deltas = parse_grid(delta_grid);
            const auto rs = parse_grid(r_grid);
            const netevo::HeatmapTable table =
                netevo::sweep(parsed.config, deltas, rs, replicas);
            fs::create_directories(out_dir);
            netevo::write_file((fs::path(out_dir) / "heatmap.csv").string(),
                               netevo::heatmap_csv(table));
            netevo::write_file(
                (fs::path(out_dir) / "heatmap_coop.svg").string(),
                netevo::render_heatmap(table.mean_coop, rs, deltas, "cooperation fraction"));
            netevo::write_file((fs::path(out_dir) / "heatmap_nc.svg").string(),
                               netevo::render_heatmap(table.mean_nc, rs, deltas, "N_c"));
        } else if (theory->parsed()) {
            netevo::ParsedConfig parsed = netevo::parse_config(config_path);
            const auto& c = parsed.config;
            const auto moments = netevo::steady_state_moments(c.lambda, c.lifetime);
            std::cout << "mean = " << moments.mean << "\n"
                      << "variance = " << moments.variance << "\n"
                      << "mean_sojourn = " << moments.mean_sojourn << "\n";
            if (pmf_to < 0)
                pmf_to = static_cast<int>(moments.mean + 5.0 * std::sqrt(moments.variance));
            std::ostringstream pmf;
            pmf << "i,pi\n";
            for (int i = pmf_from; i <= pmf_to; ++i)
                pmf << i << ',' << netevo::limiting_pmf(c.lambda, c.lifetime, i) << '\n';
            if (out_dir.empty()) {
                std::cout << pmf.str();
            } else {
                fs::create_directories(out_dir);
                netevo::write_file((fs::path(out_dir) / "pmf.csv").string(), pmf.str());
            }
        } else if (metrics->parsed()) {
            const netevo::WeightGraph graph = netevo::read_edge_list(edges_path);
            fs::create_directories(out_dir);
            netevo::write_file((fs::path(out_dir) / "metrics.json").string(),
                               netevo::metrics_json(graph));
            netevo::write_file((fs::path(out_dir) / "degree_distribution.csv").string(),
                               netevo::degree_distribution_csv(graph));
            netevo::write_file((fs::path(out_dir) / "joint_degree.csv").string(),
                               netevo::joint_degree_csv(graph));
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
