#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "netevo/game.hpp"
#include "netevo/world.hpp"

namespace netevo {

struct DegreeDistribution {
    std::vector<int> support;
    std::vector<double> probs;
};

struct JointDegreeDistribution {
    // Symmetric matrix over the union of observed end degrees; sums to 1.
    std::vector<int> degrees;
    std::vector<std::vector<double>> probs;
};

struct ClusteringResult {
    std::vector<double> per_node;
    double global = 0.0;
};

// C_i = 2 E_i / (k_i (k_i - 1)), forced to 0 for degree <= 1; the global
// value is the unweighted node mean including the forced zeros.
inline ClusteringResult clustering_coefficient(const WeightGraph& graph)
{
    const int n = graph.node_count();
    ClusteringResult result;
    result.per_node.assign(n, 0.0);
    double total = 0.0;
    std::vector<char> is_neighbor(n, 0);
    for (int i = 0; i < n; ++i) {
        const auto& nbrs = graph.neighbors(i);
        const int k = static_cast<int>(nbrs.size());
        if (k < 2)
            continue;
        for (const auto& [j, w] : nbrs)
            is_neighbor[j] = 1;
        // each edge inside the neighborhood is seen from both ends
        long long half_links = 0;
        for (const auto& [j, w] : nbrs)
            for (const auto& [l, w2] : graph.neighbors(j))
                if (is_neighbor[l])
                    ++half_links;
        for (const auto& [j, w] : nbrs)
            is_neighbor[j] = 0;
        result.per_node[i] =
            static_cast<double>(half_links) / (static_cast<double>(k) * (k - 1));
        total += result.per_node[i];
    }
    result.global = n > 0 ? total / n : 0.0;
    return result;
}

inline DegreeDistribution degree_distribution(const WeightGraph& graph)
{
    std::map<int, int> counts;
    for (int i = 0; i < graph.node_count(); ++i)
        ++counts[graph.degree(i)];
    DegreeDistribution dist;
    const double n = graph.node_count();
    for (const auto& [degree, count] : counts) {
        dist.support.push_back(degree);
        dist.probs.push_back(count / n);
    }
    return dist;
}

// P(j,k) = m(j,k) mu(j,k) / (2M) with mu = 2 on the diagonal, laid out as
// a full symmetric matrix so the total is 1.
inline JointDegreeDistribution joint_degree_distribution(const WeightGraph& graph)
{
    const std::size_t m_edges = graph.edge_count();
    if (m_edges == 0)
        throw std::invalid_argument("joint_degree_distribution: graph has no edges");
    std::map<std::pair<int, int>, int> edge_counts; // (j <= k) -> m(j,k)
    std::map<int, int> degree_index;
    for (int i = 0; i < graph.node_count(); ++i) {
        for (const auto& [j, w] : graph.neighbors(i)) {
            if (j <= i)
                continue;
            int dj = graph.degree(i);
            int dk = graph.degree(j);
            if (dj > dk)
                std::swap(dj, dk);
            ++edge_counts[{dj, dk}];
            degree_index[dj] = 0;
            degree_index[dk] = 0;
        }
    }
    JointDegreeDistribution joint;
    int idx = 0;
    for (auto& [degree, index] : degree_index) {
        index = idx++;
        joint.degrees.push_back(degree);
    }
    joint.probs.assign(idx, std::vector<double>(idx, 0.0));
    for (const auto& [pair, count] : edge_counts) {
        const int a = degree_index[pair.first];
        const int b = degree_index[pair.second];
        const double p = static_cast<double>(count) / (2.0 * static_cast<double>(m_edges));
        if (a == b) {
            joint.probs[a][a] = 2.0 * p;
        } else {
            joint.probs[a][b] = p;
            joint.probs[b][a] = p;
        }
    }
    return joint;
}

// Degree-degree Pearson correlation over edge ends, symmetrized. Returns
// nullopt for regular graphs (zero variance at edge ends).
inline std::optional<double> assortativity(const WeightGraph& graph)
{
    double sum_x = 0.0, sum_xx = 0.0, sum_xy = 0.0;
    std::size_t pairs = 0;
    for (int i = 0; i < graph.node_count(); ++i) {
        for (const auto& [j, w] : graph.neighbors(i)) {
            if (j <= i)
                continue;
            const double dj = graph.degree(i);
            const double dk = graph.degree(j);
            // both orientations, so the marginals coincide
            sum_x += dj + dk;
            sum_xx += dj * dj + dk * dk;
            sum_xy += 2.0 * dj * dk;
            pairs += 2;
        }
    }
    if (pairs < 4)
        return std::nullopt;
    const double n = static_cast<double>(pairs);
    const double mean = sum_x / n;
    const double var = sum_xx / n - mean * mean;
    if (var <= 1e-12)
        return std::nullopt;
    const double cov = sum_xy / n - mean * mean;
    return cov / var;
}

namespace detail {

// Additive smoothing then renormalization; empirical histograms carry
// zeros where the Poisson oracle does not, and KL is undefined there.
inline std::pair<std::vector<double>, std::vector<double>>
smooth_pair(const std::vector<double>& p, const std::vector<double>& q, double eps = 1e-10)
{
    std::vector<double> sp = p, sq = q;
    double tp = 0.0, tq = 0.0;
    for (auto& v : sp)
        tp += (v += eps);
    for (auto& v : sq)
        tq += (v += eps);
    for (auto& v : sp)
        v /= tp;
    for (auto& v : sq)
        v /= tq;
    return {std::move(sp), std::move(sq)};
}

inline void check_lengths(const std::vector<double>& p, const std::vector<double>& q)
{
    if (p.size() != q.size() || p.empty())
        throw std::invalid_argument("distribution distance: supports must align and be nonempty");
}

} // namespace detail

inline double kl_divergence(const std::vector<double>& p, const std::vector<double>& q)
{
    detail::check_lengths(p, q);
    auto [sp, sq] = detail::smooth_pair(p, q);
    double kl = 0.0;
    for (std::size_t i = 0; i < sp.size(); ++i)
        if (sp[i] > 0.0)
            kl += sp[i] * std::log(sp[i] / sq[i]);
    return kl;
}

inline double js_divergence(const std::vector<double>& p, const std::vector<double>& q)
{
    detail::check_lengths(p, q);
    auto [sp, sq] = detail::smooth_pair(p, q);
    double js = 0.0;
    for (std::size_t i = 0; i < sp.size(); ++i) {
        const double m = 0.5 * (sp[i] + sq[i]);
        if (sp[i] > 0.0)
            js += 0.5 * sp[i] * std::log(sp[i] / m);
        if (sq[i] > 0.0)
            js += 0.5 * sq[i] * std::log(sq[i] / m);
    }
    return js;
}

inline double pearson(const std::vector<double>& p, const std::vector<double>& q)
{
    detail::check_lengths(p, q);
    const double n = static_cast<double>(p.size());
    double mp = 0.0, mq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        mp += p[i];
        mq += q[i];
    }
    mp /= n;
    mq /= n;
    double cov = 0.0, vp = 0.0, vq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        cov += (p[i] - mp) * (q[i] - mq);
        vp += (p[i] - mp) * (p[i] - mp);
        vq += (q[i] - mq) * (q[i] - mq);
    }
    if (vp <= 0.0 || vq <= 0.0)
        throw std::invalid_argument("pearson: zero variance");
    return cov / std::sqrt(vp * vq);
}

inline double cosine(const std::vector<double>& p, const std::vector<double>& q)
{
    detail::check_lengths(p, q);
    double dot = 0.0, np = 0.0, nq = 0.0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        dot += p[i] * q[i];
        np += p[i] * p[i];
        nq += q[i] * q[i];
    }
    if (np <= 0.0 || nq <= 0.0)
        throw std::invalid_argument("cosine: zero vector");
    return dot / (std::sqrt(np) * std::sqrt(nq));
}

// Sum of the four largest cell occupancies (all cells when fewer than 4).
inline int n_c(const Grid& grid)
{
    std::vector<int> counts;
    counts.reserve(grid.cell_count());
    for (int cell = 0; cell < grid.cell_count(); ++cell)
        counts.push_back(static_cast<int>(grid.occupants(cell).size()));
    const std::size_t top = std::min<std::size_t>(4, counts.size());
    std::partial_sort(counts.begin(), counts.begin() + top, counts.end(), std::greater<>());
    int sum = 0;
    for (std::size_t k = 0; k < top; ++k)
        sum += counts[k];
    return sum;
}

inline double cooperation_fraction(const std::vector<Strategy>& strategies)
{
    if (strategies.empty())
        return 0.0;
    std::size_t coop = 0;
    for (const Strategy s : strategies)
        if (s == Strategy::Cooperate)
            ++coop;
    return static_cast<double>(coop) / static_cast<double>(strategies.size());
}

inline double state_transition_ratio(const std::vector<int>& prev_locations,
                                     const std::vector<int>& new_locations)
{
    if (prev_locations.empty())
        return 0.0;
    std::size_t moved = 0;
    for (std::size_t i = 0; i < prev_locations.size(); ++i)
        if (prev_locations[i] != new_locations[i])
            ++moved;
    return static_cast<double>(moved) / static_cast<double>(prev_locations.size());
}

} // namespace netevo
