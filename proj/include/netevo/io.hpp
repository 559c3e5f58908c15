#pragma once

#include <array>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "netevo/config.hpp"
#include "netevo/engine.hpp"
#include "netevo/metrics.hpp"

namespace netevo {

namespace detail {

inline std::string format_real(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

} // namespace detail

inline std::string timeseries_csv(const RunRecord& record)
{
    std::ostringstream out;
    out << "step,population,coop_fraction,n_c,transition_ratio\n";
    for (const auto& row : record.rows) {
        out << row.step << ',' << row.population << ',' << detail::format_real(row.coop_fraction)
            << ',' << row.n_c << ',' << detail::format_real(row.transition_ratio) << '\n';
    }
    return out.str();
}

inline std::string summary_json(const SimConfig& config, const RunRecord& record)
{
    const RunSummary s = summarize(record, config.horizon);
    nlohmann::json j{{"config", config_to_json(config)},
                     {"seed", config.seed},
                     {"final_window",
                      {{"begin_step", s.window_begin},
                       {"mean_population", s.mean_population},
                       {"mean_coop_fraction", s.mean_coop},
                       {"mean_n_c", s.mean_nc},
                       {"mean_transition_ratio", s.mean_transition}}}};
    return j.dump(2) + "\n";
}

inline std::string snapshot_nodes_csv(const Snapshot& snap)
{
    std::ostringstream out;
    out << "id,row,col,strategy\n";
    for (const auto& node : snap.nodes)
        out << node.id << ',' << node.row << ',' << node.col << ','
            << (node.strategy == Strategy::Cooperate ? 'C' : 'D') << '\n';
    return out.str();
}

inline std::string snapshot_edges_csv(const Snapshot& snap)
{
    std::ostringstream out;
    out << "src_id,dst_id,weight\n";
    for (const auto& edge : snap.edges)
        out << edge.src << ',' << edge.dst << ',' << detail::format_real(edge.weight) << '\n';
    return out.str();
}

inline std::string heatmap_csv(const HeatmapTable& table)
{
    std::ostringstream out;
    out << "delta,r,mean_coop,mean_nc\n";
    for (std::size_t di = 0; di < table.delta_values.size(); ++di)
        for (std::size_t ri = 0; ri < table.r_values.size(); ++ri)
            out << detail::format_real(table.delta_values[di]) << ','
                << detail::format_real(table.r_values[ri]) << ','
                << detail::format_real(table.mean_coop[di][ri]) << ','
                << detail::format_real(table.mean_nc[di][ri]) << '\n';
    return out.str();
}

// Reads an edge-list snapshot (src_id,dst_id,weight with header) into a
// graph; node slots are assigned in order of first appearance.
inline WeightGraph read_edge_list(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open edge list: " + path);
    WeightGraph graph;
    std::unordered_map<long long, int> slot_of;
    auto slot_for = [&](long long id) {
        auto it = slot_of.find(id);
        if (it != slot_of.end())
            return it->second;
        const int slot = graph.add_node();
        slot_of.emplace(id, slot);
        return slot;
    };
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty())
            continue;
        if (first) {
            first = false;
            if (line.find_first_not_of("0123456789-, .eE+") != std::string::npos)
                continue; // header
        }
        long long src, dst;
        double weight = 1.0;
        char c1, c2;
        std::istringstream row(line);
        if (!(row >> src >> c1 >> dst))
            throw std::runtime_error("malformed edge list line: " + line);
        row >> c2 >> weight;
        const int src_slot = slot_for(src);
        const int dst_slot = slot_for(dst);
        graph.set_edge(src_slot, dst_slot, weight);
    }
    return graph;
}

inline std::string metrics_json(const WeightGraph& graph)
{
    const ClusteringResult clustering = clustering_coefficient(graph);
    nlohmann::json histogram = nlohmann::json::array();
    constexpr int kBins = 20;
    std::array<int, kBins> bins{};
    for (const double c : clustering.per_node)
        ++bins[std::min(kBins - 1, static_cast<int>(c * kBins))];
    for (int b = 0; b < kBins; ++b)
        histogram.push_back(
            {{"bin_low", static_cast<double>(b) / kBins}, {"count", bins[b]}});
    nlohmann::json j{{"nodes", graph.node_count()},
                     {"edges", graph.edge_count()},
                     {"clustering_global", clustering.global},
                     {"clustering_histogram", histogram}};
    const auto assort = assortativity(graph);
    if (assort)
        j["assortativity"] = *assort;
    else
        j["assortativity"] = nullptr;
    return j.dump(2) + "\n";
}

inline std::string degree_distribution_csv(const WeightGraph& graph)
{
    const DegreeDistribution dist = degree_distribution(graph);
    std::ostringstream out;
    out << "degree,probability\n";
    for (std::size_t i = 0; i < dist.support.size(); ++i)
        out << dist.support[i] << ',' << detail::format_real(dist.probs[i]) << '\n';
    return out.str();
}

inline std::string joint_degree_csv(const WeightGraph& graph)
{
    const JointDegreeDistribution joint = joint_degree_distribution(graph);
    std::ostringstream out;
    out << "j,k,probability\n";
    for (std::size_t a = 0; a < joint.degrees.size(); ++a)
        for (std::size_t b = 0; b < joint.degrees.size(); ++b)
            if (joint.probs[a][b] > 0.0)
                out << joint.degrees[a] << ',' << joint.degrees[b] << ','
                    << detail::format_real(joint.probs[a][b]) << '\n';
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot write file: " + path);
    out << content;
}

} // namespace netevo
