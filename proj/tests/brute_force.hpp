#pragma once

// Independent brute-force reference implementations used as oracles.
// These deliberately avoid the library's metric code paths: everything is
// recomputed from plain edge lists with naive enumeration.

#include <algorithm>
#include <cmath>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "netevo/rng.hpp"
#include "netevo/world.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

inline EdgeList edges_of(const netevo::WeightGraph& graph)
{
    EdgeList edges;
    for (int i = 0; i < graph.node_count(); ++i)
        for (const auto& [j, w] : graph.neighbors(i))
            if (i < j)
                edges.emplace_back(i, j);
    std::sort(edges.begin(), edges.end());
    return edges;
}

inline std::vector<int> degrees(int n, const EdgeList& edges)
{
    std::vector<int> deg(n, 0);
    for (const auto& [a, b] : edges) {
        ++deg[a];
        ++deg[b];
    }
    return deg;
}

// Clustering by explicit triangle enumeration over node triples.
inline std::pair<std::vector<double>, double> clustering(int n, const EdgeList& edges)
{
    std::set<std::pair<int, int>> edge_set(edges.begin(), edges.end());
    auto connected = [&](int a, int b) {
        return edge_set.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    std::vector<double> per_node(n, 0.0);
    for (int i = 0; i < n; ++i) {
        std::vector<int> nbrs;
        for (int j = 0; j < n; ++j)
            if (j != i && connected(i, j))
                nbrs.push_back(j);
        const int k = static_cast<int>(nbrs.size());
        if (k < 2)
            continue;
        int closed = 0;
        for (std::size_t a = 0; a < nbrs.size(); ++a)
            for (std::size_t b = a + 1; b < nbrs.size(); ++b)
                if (connected(nbrs[a], nbrs[b]))
                    ++closed;
        per_node[i] = 2.0 * closed / (static_cast<double>(k) * (k - 1));
    }
    double total = 0.0;
    for (const double c : per_node)
        total += c;
    return {per_node, n > 0 ? total / n : 0.0};
}

// Joint degree distribution assembled edge by edge.
inline std::map<std::pair<int, int>, double> joint_degree(int n, const EdgeList& edges)
{
    const auto deg = degrees(n, edges);
    std::map<std::pair<int, int>, double> probs;
    const double denom = 2.0 * static_cast<double>(edges.size());
    for (const auto& [a, b] : edges) {
        probs[{deg[a], deg[b]}] += 1.0 / denom;
        probs[{deg[b], deg[a]}] += 1.0 / denom;
    }
    return probs;
}

// Pearson correlation over the list of (deg_a, deg_b) pairs, both
// orientations per edge.
inline std::optional<double> assortativity(int n, const EdgeList& edges)
{
    const auto deg = degrees(n, edges);
    std::vector<std::pair<double, double>> points;
    for (const auto& [a, b] : edges) {
        points.emplace_back(deg[a], deg[b]);
        points.emplace_back(deg[b], deg[a]);
    }
    if (points.size() < 4)
        return std::nullopt;
    double mx = 0.0, my = 0.0;
    for (const auto& [x, y] : points) {
        mx += x;
        my += y;
    }
    mx /= points.size();
    my /= points.size();
    double cov = 0.0, vx = 0.0, vy = 0.0;
    for (const auto& [x, y] : points) {
        cov += (x - mx) * (y - my);
        vx += (x - mx) * (x - mx);
        vy += (y - my) * (y - my);
    }
    if (vx <= 1e-12 || vy <= 1e-12)
        return std::nullopt;
    return cov / std::sqrt(vx * vy);
}

// Top-4 occupancy by full sort.
inline int top4_sum(std::vector<int> counts)
{
    std::sort(counts.begin(), counts.end(), std::greater<>());
    int sum = 0;
    for (std::size_t k = 0; k < std::min<std::size_t>(4, counts.size()); ++k)
        sum += counts[k];
    return sum;
}

inline netevo::WeightGraph random_graph(int max_nodes, netevo::RandomSource& rng)
{
    const int n = 2 + static_cast<int>(rng.uniform_below(max_nodes - 1));
    netevo::WeightGraph graph;
    for (int i = 0; i < n; ++i)
        graph.add_node();
    const double p = 0.15 + 0.7 * rng.uniform01();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (rng.bernoulli(p))
                graph.set_edge(i, j, 1.0 + rng.uniform01());
    return graph;
}

} // namespace oracle
