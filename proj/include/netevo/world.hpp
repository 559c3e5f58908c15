#pragma once

#include <cassert>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netevo/learning.hpp"
#include "netevo/rng.hpp"

namespace netevo {

// The r x c lattice. Individuals are addressed by dense slot indices;
// slot parallel arrays elsewhere (Q-tables, strategies) follow the same
// swap-remove discipline as the graph.
class Grid {
public:
    Grid(int rows, int cols)
        : rows_(rows), cols_(cols), cells_(static_cast<std::size_t>(rows) * cols)
    {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("Grid: dimensions must be positive");
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    int cell_count() const { return rows_ * cols_; }
    int population() const { return static_cast<int>(cell_of_.size()); }

    int cell_of(int slot) const { return cell_of_[slot]; }
    const std::vector<int>& occupants(int cell) const { return cells_[cell]; }

    int add(int cell)
    {
        const int slot = population();
        cell_of_.push_back(cell);
        cells_[cell].push_back(slot);
        return slot;
    }

    void move(int slot, int new_cell)
    {
        const int old_cell = cell_of_[slot];
        if (old_cell == new_cell)
            return;
        detach(slot, old_cell);
        cell_of_[slot] = new_cell;
        cells_[new_cell].push_back(slot);
    }

    // Swap-removes the slot; the previous last slot takes its index.
    void remove(int slot)
    {
        detach(slot, cell_of_[slot]);
        const int last = population() - 1;
        if (slot != last) {
            cell_of_[slot] = cell_of_[last];
            for (int& s : cells_[cell_of_[slot]])
                if (s == last)
                    s = slot;
        }
        cell_of_.pop_back();
    }

private:
    void detach(int slot, int cell)
    {
        auto& occ = cells_[cell];
        for (std::size_t k = 0; k < occ.size(); ++k) {
            if (occ[k] == slot) {
                occ[k] = occ.back();
                occ.pop_back();
                return;
            }
        }
        assert(false && "slot not found in its cell");
    }

    int rows_;
    int cols_;
    std::vector<std::vector<int>> cells_;
    std::vector<int> cell_of_;
};

// Directional moves clamp at the boundary; RandomMove teleports uniformly
// over all cells.
inline int apply_move(const Grid& grid, int cell, Action action, RandomSource& rng)
{
    const int cols = grid.cols();
    const int row = cell / cols;
    const int col = cell % cols;
    switch (action) {
    case Action::Left:
        return col > 0 ? cell - 1 : cell;
    case Action::Right:
        return col < cols - 1 ? cell + 1 : cell;
    case Action::Up:
        return row > 0 ? cell - cols : cell;
    case Action::Down:
        return row < grid.rows() - 1 ? cell + cols : cell;
    case Action::Stay:
        return cell;
    case Action::RandomMove:
        return static_cast<int>(rng.uniform_below(grid.cell_count()));
    }
    return cell;
}

// Symmetric weighted adjacency over living individuals. Every stored
// weight is positive; pruning keeps the minimum at or above sigma.
class WeightGraph {
public:
    using Neighbor = std::pair<int, double>; // (slot, weight)

    WeightGraph() = default;
    explicit WeightGraph(int node_count) : adj_(node_count) {}

    int node_count() const { return static_cast<int>(adj_.size()); }

    std::size_t edge_count() const
    {
        std::size_t total = 0;
        for (const auto& nbrs : adj_)
            total += nbrs.size();
        return total / 2;
    }

    const std::vector<Neighbor>& neighbors(int slot) const { return adj_[slot]; }

    int degree(int slot) const { return static_cast<int>(adj_[slot].size()); }

    bool has_edge(int i, int j) const { return find(i, j) >= 0; }

    double edge_weight(int i, int j) const
    {
        const int k = find(i, j);
        return k >= 0 ? adj_[i][k].second : 0.0;
    }

    int add_node()
    {
        adj_.emplace_back();
        return node_count() - 1;
    }

    void set_edge(int i, int j, double w)
    {
        assert(i != j);
        const int ki = find(i, j);
        if (ki >= 0) {
            adj_[i][ki].second = w;
            adj_[j][find(j, i)].second = w;
        } else {
            adj_[i].emplace_back(j, w);
            adj_[j].emplace_back(i, w);
        }
    }

    void remove_edge(int i, int j)
    {
        erase_half(i, j);
        erase_half(j, i);
    }

    // Deletes all incident edges, then swap-removes the node; the previous
    // last node takes index `slot`.
    void remove_node(int slot)
    {
        for (const auto& [j, w] : adj_[slot])
            erase_half(j, slot);
        adj_[slot].clear();
        const int last = node_count() - 1;
        if (slot != last) {
            adj_[slot] = std::move(adj_[last]);
            for (const auto& [j, w] : adj_[slot]) {
                const int k = find(j, last);
                adj_[j][k].first = slot;
            }
        }
        adj_.pop_back();
    }

    // One co-location update round over the post-move grid:
    //  - every existing edge decays by 1/beta;
    //  - decayed edges between separated pairs are pruned when < sigma
    //    (kept at exact equality);
    //  - co-located pairs gain tau, creating the edge at tau if absent.
    void update_weights(const Grid& grid, double beta, double tau, double sigma)
    {
        const int n = node_count();
        // decay (and, for co-located pairs, reinforce) every half-edge in
        // place; both copies of an edge receive the same treatment, so
        // symmetry is preserved without cross lookups
        for (int i = 0; i < n; ++i) {
            auto& nbrs = adj_[i];
            const int cell_i = grid.cell_of(i);
            for (std::size_t k = 0; k < nbrs.size();) {
                nbrs[k].second /= beta;
                if (grid.cell_of(nbrs[k].first) == cell_i) {
                    nbrs[k].second += tau;
                    ++k;
                } else if (nbrs[k].second < sigma) {
                    nbrs[k] = nbrs.back();
                    nbrs.pop_back();
                } else {
                    ++k;
                }
            }
        }
        // create missing edges among co-located pairs; a stamp array keeps
        // the adjacency test O(1), which matters in crowded cells
        std::vector<int> stamp(n, -1);
        for (int cell = 0; cell < grid.cell_count(); ++cell) {
            const auto& occ = grid.occupants(cell);
            for (std::size_t a = 0; a + 1 < occ.size(); ++a) {
                const int i = occ[a];
                for (const auto& [j, w] : adj_[i])
                    stamp[j] = i;
                for (std::size_t b = a + 1; b < occ.size(); ++b) {
                    const int j = occ[b];
                    if (stamp[j] != i) {
                        adj_[i].emplace_back(j, tau);
                        adj_[j].emplace_back(i, tau);
                    }
                }
            }
        }
    }

private:
    int find(int i, int j) const
    {
        const auto& nbrs = adj_[i];
        for (std::size_t k = 0; k < nbrs.size(); ++k)
            if (nbrs[k].first == j)
                return static_cast<int>(k);
        return -1;
    }

    void erase_half(int i, int j)
    {
        auto& nbrs = adj_[i];
        for (std::size_t k = 0; k < nbrs.size(); ++k) {
            if (nbrs[k].first == j) {
                nbrs[k] = nbrs.back();
                nbrs.pop_back();
                return;
            }
        }
        assert(false && "edge half missing");
    }

    std::vector<std::vector<Neighbor>> adj_;
};

// Places a newborn in a uniformly random cell and connects it with weight
// tau to every individual already there. Returns the new slot.
inline int on_birth(Grid& grid, WeightGraph& graph, double tau, RandomSource& rng)
{
    const int cell = static_cast<int>(rng.uniform_below(grid.cell_count()));
    const int slot = graph.add_node();
    for (const int other : grid.occupants(cell))
        graph.set_edge(slot, other, tau);
    grid.add(cell);
    return slot;
}

// Removes the individual and all its incident edges. Both containers
// swap-remove, so the caller must remap its own slot-parallel state.
inline void on_death(Grid& grid, WeightGraph& graph, int slot)
{
    if (slot < 0 || slot >= grid.population())
        throw std::logic_error("on_death: unknown slot");
    grid.remove(slot);
    graph.remove_node(slot);
}

} // namespace netevo
