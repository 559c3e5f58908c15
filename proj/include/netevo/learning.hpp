#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <vector>

#include "netevo/rng.hpp"

namespace netevo {

// Six movement actions. RandomMove is a regular action with its own
// Q-value; it is distinct from epsilon-exploration.
enum class Action : int {
    Left = 0,
    Right = 1,
    Up = 2,
    Down = 3,
    Stay = 4,
    RandomMove = 5,
};

inline constexpr int kActionCount = 6;

// Per-agent utility table, one row per grid cell.
class QTable {
public:
    QTable() = default;
    explicit QTable(int state_count) : values_(static_cast<std::size_t>(state_count) * kActionCount, 0.0) {}

    int state_count() const { return static_cast<int>(values_.size() / kActionCount); }

    double get(int state, Action a) const
    {
        return values_[static_cast<std::size_t>(state) * kActionCount + static_cast<int>(a)];
    }

    void set(int state, Action a, double v)
    {
        values_[static_cast<std::size_t>(state) * kActionCount + static_cast<int>(a)] = v;
    }

    const double* row(int state) const { return values_.data() + static_cast<std::size_t>(state) * kActionCount; }

    double row_max(int state) const
    {
        const double* r = row(state);
        return *std::max_element(r, r + kActionCount);
    }

private:
    std::vector<double> values_;
};

// Epsilon-greedy selection: exploit (argmax, uniform among exact ties)
// with probability delta, otherwise a uniformly random action.
inline Action select_action(const QTable& q, int state, double delta, RandomSource& rng)
{
    if (!rng.bernoulli(delta))
        return static_cast<Action>(rng.uniform_below(kActionCount));
    const double* r = q.row(state);
    const double best = *std::max_element(r, r + kActionCount);
    std::array<int, kActionCount> ties{};
    int tie_count = 0;
    for (int a = 0; a < kActionCount; ++a)
        if (r[a] == best)
            ties[tie_count++] = a;
    if (tie_count == 1)
        return static_cast<Action>(ties[0]);
    return static_cast<Action>(ties[rng.uniform_below(tie_count)]);
}

// One Bellman update. max over the next state is taken on the table as
// passed in, i.e. the caller's frozen snapshot.
inline void q_update(QTable& q, int s, Action a, double reward, int s_next, double eta,
                     double gamma)
{
    const double old = q.get(s, a);
    const double target = reward + gamma * q.row_max(s_next);
    q.set(s, a, old + eta * (target - old));
}

// Non-learning baseline: with probability epsilon inspect the adjacent
// cells and move to the best one iff it strictly beats the current cell.
// neighbor_payoffs holds (location, payoff) for the <=4 adjacent cells.
inline int heuristic_step(int location, double epsilon,
                          const std::vector<std::pair<int, double>>& neighbor_payoffs,
                          double current_payoff, RandomSource& rng)
{
    if (!rng.bernoulli(epsilon))
        return location;
    double best = current_payoff;
    std::array<int, 4> best_cells{};
    int best_count = 0;
    for (const auto& [cell, payoff] : neighbor_payoffs) {
        if (payoff > best) {
            best = payoff;
            best_cells[0] = cell;
            best_count = 1;
        } else if (payoff == best && best_count > 0) {
            best_cells[best_count++] = cell;
        }
    }
    if (best_count == 0)
        return location;
    if (best_count == 1)
        return best_cells[0];
    return best_cells[rng.uniform_below(best_count)];
}

} // namespace netevo
