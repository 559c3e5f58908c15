#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "netevo/rng.hpp"
#include "netevo/world.hpp"

namespace netevo {

enum class Strategy : int {
    Cooperate = 0,
    Defect = 1,
};

// 2x2 game, row = focal strategy, column = opponent strategy.
struct PayoffMatrix {
    std::array<std::array<double, 2>, 2> entries;

    double payoff(Strategy focal, Strategy opponent) const
    {
        return entries[static_cast<int>(focal)][static_cast<int>(opponent)];
    }
};

inline PayoffMatrix snowdrift(double r)
{
    if (r < 0.0 || r > 1.0)
        throw std::invalid_argument("snowdrift: r must be in [0, 1]");
    return PayoffMatrix{{{{1.0, 1.0 - r}, {1.0 + r, 0.0}}}};
}

inline PayoffMatrix stag_hunt(double r)
{
    if (r < 0.0 || r > 1.0)
        throw std::invalid_argument("stag_hunt: r must be in [0, 1]");
    return PayoffMatrix{{{{1.0, -r}, {r, 0.0}}}};
}

// Each node's payoff is the unweighted sum of matrix entries over its
// neighbors; edge weights gate existence only. Isolated nodes earn 0.
// strategies is indexed by graph slot.
inline std::vector<double> accumulate_payoffs(const WeightGraph& graph,
                                              const std::vector<Strategy>& strategies,
                                              const PayoffMatrix& m)
{
    const int n = graph.node_count();
    std::vector<double> payoffs(n, 0.0);
    for (int i = 0; i < n; ++i) {
        const Strategy si = strategies[i];
        double u = 0.0;
        for (const auto& [j, w] : graph.neighbors(i))
            u += m.payoff(si, strategies[j]);
        payoffs[i] = u;
    }
    return payoffs;
}

inline double fermi_adopt_probability(double u_i, double u_j, double kappa)
{
    return 1.0 / (1.0 + std::exp((u_i - u_j) / kappa));
}

// Synchronous Fermi imitation: each node picks one neighbor uniformly and
// adopts its pre-update strategy with the Fermi probability. Isolated
// nodes keep their strategy. Nodes are processed in slot order.
inline std::vector<Strategy> strategy_update(const WeightGraph& graph,
                                             const std::vector<Strategy>& strategies,
                                             const std::vector<double>& payoffs, double kappa,
                                             RandomSource& rng)
{
    std::vector<Strategy> updated = strategies;
    const int n = graph.node_count();
    for (int i = 0; i < n; ++i) {
        const auto& nbrs = graph.neighbors(i);
        if (nbrs.empty())
            continue;
        const int j = nbrs[rng.uniform_below(nbrs.size())].first;
        if (rng.bernoulli(fermi_adopt_probability(payoffs[i], payoffs[j], kappa)))
            updated[i] = strategies[j];
    }
    return updated;
}

} // namespace netevo
