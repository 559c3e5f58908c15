#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "netevo/birth_death.hpp"
#include "netevo/distributions.hpp"
#include "netevo/game.hpp"
#include "netevo/learning.hpp"
#include "netevo/metrics.hpp"
#include "netevo/rng.hpp"
#include "netevo/world.hpp"

namespace netevo {

struct SimConfig {
    int rows = 10;
    int cols = 10;
    int initial_per_cell = 3;
    bool birth_death = false;
    double lambda = 3.0;
    LifetimeDistribution lifetime = LifetimeDistribution::power_law(80.0, 5.0);
    double delta = 0.9; // exploitation rate; epsilon = 1 - delta
    double eta = 0.7;
    double gamma = 0.3;
    std::string game = "snowdrift"; // or "staghunt"
    double r = 0.2;
    double kappa = 0.1;
    double beta = 2.0;
    double tau = 1.0;
    double sigma = 0.5;
    int horizon = 5000;
    std::uint64_t seed = 1;
    int record_every = 1;
    std::vector<int> snapshot_steps;
    std::string reward_mode = "cell_total"; // or "own"

    void validate() const
    {
        if (rows <= 0 || cols <= 0)
            throw std::invalid_argument("rows/cols must be positive");
        if (initial_per_cell < 0)
            throw std::invalid_argument("initial_per_cell must be >= 0");
        if (delta < 0.0 || delta > 1.0)
            throw std::invalid_argument("delta must be in [0, 1]");
        if (!(eta > 0.0) || eta > 1.0)
            throw std::invalid_argument("eta must be in (0, 1]");
        if (gamma < 0.0 || !(gamma < 1.0))
            throw std::invalid_argument("gamma must be in [0, 1)");
        if (game != "snowdrift" && game != "staghunt")
            throw std::invalid_argument("game must be snowdrift or staghunt");
        if (r < 0.0 || r > 1.0)
            throw std::invalid_argument("r must be in [0, 1]");
        if (!(kappa > 0.0))
            throw std::invalid_argument("kappa must be > 0");
        if (!(beta > 1.0))
            throw std::invalid_argument("beta must be > 1");
        if (!(tau > 0.0))
            throw std::invalid_argument("tau must be > 0");
        if (!(sigma > 0.0))
            throw std::invalid_argument("sigma must be > 0");
        if (horizon < 0)
            throw std::invalid_argument("horizon must be >= 0");
        if (!birth_death && initial_per_cell == 0)
            throw std::invalid_argument("initial_per_cell must be >= 1 without birth-death");
        if (birth_death && !(lambda > 0.0))
            throw std::invalid_argument("lambda must be > 0");
        if (record_every < 1)
            throw std::invalid_argument("record_every must be >= 1");
        if (reward_mode != "cell_total" && reward_mode != "own")
            throw std::invalid_argument("reward_mode must be cell_total or own");
    }

    PayoffMatrix payoff_matrix() const
    {
        return game == "staghunt" ? stag_hunt(r) : snowdrift(r);
    }
};

struct RecordRow {
    int step;
    int population;
    double coop_fraction;
    int n_c;
    double transition_ratio;
};

struct Snapshot {
    struct Node {
        int id;
        int row;
        int col;
        Strategy strategy;
    };
    struct Edge {
        int src;
        int dst;
        double weight;
    };
    int step = 0;
    std::vector<Node> nodes;
    std::vector<Edge> edges;
};

struct RunRecord {
    std::vector<RecordRow> rows;
    std::vector<Snapshot> snapshots;
};

struct RunSummary {
    int window_begin; // first step of the final 10% window
    double mean_population;
    double mean_coop;
    double mean_nc;
    double mean_transition;
};

inline RunSummary summarize(const RunRecord& record, int horizon)
{
    RunSummary s{};
    s.window_begin = horizon - horizon / 10;
    double pop = 0.0, coop = 0.0, nc = 0.0, trans = 0.0;
    int count = 0;
    for (const auto& row : record.rows) {
        if (row.step < s.window_begin)
            continue;
        pop += row.population;
        coop += row.coop_fraction;
        nc += row.n_c;
        trans += row.transition_ratio;
        ++count;
    }
    if (count > 0) {
        s.mean_population = pop / count;
        s.mean_coop = coop / count;
        s.mean_nc = nc / count;
        s.mean_transition = trans / count;
    }
    return s;
}

// Live simulation state. Slot-parallel arrays follow the swap-remove
// discipline of Grid/WeightGraph; agents are always processed in slot
// order, which is fully determined by the event history.
struct SimState {
    Grid grid;
    WeightGraph graph;
    std::vector<int> id_of;
    std::vector<Strategy> strategies;
    std::vector<QTable> qtables;
    std::unordered_map<int, int> slot_of_id;
    int next_id = 0;

    // diagnostics from the latest step
    std::vector<double> last_payoffs;
    std::vector<double> last_rewards;
    std::vector<double> cell_payoff_totals;

    SimState(int rows, int cols) : grid(rows, cols), cell_payoff_totals(rows * cols, 0.0) {}

    int population() const { return grid.population(); }

    int add_individual(int cell, Strategy strategy, int q_states)
    {
        const int slot = graph.add_node();
        grid.add(cell);
        id_of.push_back(next_id);
        strategies.push_back(strategy);
        qtables.emplace_back(q_states);
        slot_of_id[next_id] = slot;
        return next_id++;
    }

    void remove_individual(int slot)
    {
        on_death(grid, graph, slot);
        slot_of_id.erase(id_of[slot]);
        const int last = static_cast<int>(id_of.size()) - 1;
        if (slot != last) {
            id_of[slot] = id_of[last];
            strategies[slot] = strategies[last];
            qtables[slot] = std::move(qtables[last]);
            slot_of_id[id_of[slot]] = slot;
        }
        id_of.pop_back();
        strategies.pop_back();
        qtables.pop_back();
    }

    Snapshot snapshot(int step) const
    {
        Snapshot snap;
        snap.step = step;
        const int n = population();
        snap.nodes.reserve(n);
        for (int slot = 0; slot < n; ++slot) {
            const int cell = grid.cell_of(slot);
            snap.nodes.push_back(
                {id_of[slot], cell / grid.cols(), cell % grid.cols(), strategies[slot]});
        }
        for (int slot = 0; slot < n; ++slot)
            for (const auto& [j, w] : graph.neighbors(slot))
                if (slot < j)
                    snap.edges.push_back({id_of[slot], id_of[j], w});
        std::sort(snap.nodes.begin(), snap.nodes.end(),
                  [](const auto& a, const auto& b) { return a.id < b.id; });
        std::sort(snap.edges.begin(), snap.edges.end(), [](const auto& a, const auto& b) {
            return std::pair(std::min(a.src, a.dst), std::max(a.src, a.dst)) <
                std::pair(std::min(b.src, b.dst), std::max(b.src, b.dst));
        });
        return snap;
    }
};

namespace detail {

inline void accumulate_cell_totals(SimState& state, const std::vector<double>& payoffs)
{
    std::fill(state.cell_payoff_totals.begin(), state.cell_payoff_totals.end(), 0.0);
    for (int slot = 0; slot < state.population(); ++slot)
        state.cell_payoff_totals[state.grid.cell_of(slot)] += payoffs[slot];
}

} // namespace detail

// One synchronous unit step: move -> rewire -> play -> learn -> imitate.
// Returns the state transition ratio of the step.
inline double step(SimState& state, const SimConfig& config, const PayoffMatrix& matrix,
                   RandomSource& rng)
{
    const int n = state.population();
    std::vector<int> prev_loc(n), new_loc(n);
    std::vector<Action> actions(n);
    for (int slot = 0; slot < n; ++slot) {
        prev_loc[slot] = state.grid.cell_of(slot);
        actions[slot] = select_action(state.qtables[slot], prev_loc[slot], config.delta, rng);
        new_loc[slot] = apply_move(state.grid, prev_loc[slot], actions[slot], rng);
    }
    for (int slot = 0; slot < n; ++slot)
        state.grid.move(slot, new_loc[slot]);

    state.graph.update_weights(state.grid, config.beta, config.tau, config.sigma);

    const std::vector<double> payoffs = accumulate_payoffs(state.graph, state.strategies, matrix);
    detail::accumulate_cell_totals(state, payoffs);

    state.last_rewards.assign(n, 0.0);
    for (int slot = 0; slot < n; ++slot) {
        const double reward = config.reward_mode == "own"
            ? payoffs[slot]
            : state.cell_payoff_totals[new_loc[slot]];
        state.last_rewards[slot] = reward;
        q_update(state.qtables[slot], prev_loc[slot], actions[slot], reward, new_loc[slot],
                 config.eta, config.gamma);
    }

    state.strategies = strategy_update(state.graph, state.strategies, payoffs, config.kappa, rng);
    state.last_payoffs = payoffs;
    return state_transition_ratio(prev_loc, new_loc);
}

// Heuristic variant of the step: movement inspects the previous step's
// per-cell payoff totals; no Q-tables are involved.
inline double heuristic_movement_step(SimState& state, const SimConfig& config,
                                      const PayoffMatrix& matrix, double epsilon,
                                      RandomSource& rng)
{
    const int n = state.population();
    const std::vector<double> prev_totals = state.cell_payoff_totals;
    std::vector<int> prev_loc(n), new_loc(n);
    const int cols = state.grid.cols();
    const int rows = state.grid.rows();
    std::vector<std::pair<int, double>> nbrs;
    for (int slot = 0; slot < n; ++slot) {
        const int cell = state.grid.cell_of(slot);
        prev_loc[slot] = cell;
        nbrs.clear();
        const int row = cell / cols;
        const int col = cell % cols;
        if (col > 0)
            nbrs.emplace_back(cell - 1, prev_totals[cell - 1]);
        if (col < cols - 1)
            nbrs.emplace_back(cell + 1, prev_totals[cell + 1]);
        if (row > 0)
            nbrs.emplace_back(cell - cols, prev_totals[cell - cols]);
        if (row < rows - 1)
            nbrs.emplace_back(cell + cols, prev_totals[cell + cols]);
        new_loc[slot] = heuristic_step(cell, epsilon, nbrs, prev_totals[cell], rng);
    }
    for (int slot = 0; slot < n; ++slot)
        state.grid.move(slot, new_loc[slot]);

    state.graph.update_weights(state.grid, config.beta, config.tau, config.sigma);
    const std::vector<double> payoffs = accumulate_payoffs(state.graph, state.strategies, matrix);
    detail::accumulate_cell_totals(state, payoffs);
    state.strategies = strategy_update(state.graph, state.strategies, payoffs, config.kappa, rng);
    state.last_payoffs = payoffs;
    return state_transition_ratio(prev_loc, new_loc);
}

struct RunResult {
    RunRecord record;
    SimState final_state;
};

namespace detail {

inline void record_row(RunRecord& record, const SimState& state, int step_index,
                       double transition_ratio, const SimConfig& config)
{
    if (step_index % config.record_every == 0 || step_index == config.horizon) {
        record.rows.push_back({step_index, state.population(),
                               cooperation_fraction(state.strategies), n_c(state.grid),
                               transition_ratio});
    }
    if (std::find(config.snapshot_steps.begin(), config.snapshot_steps.end(), step_index) !=
        config.snapshot_steps.end())
        record.snapshots.push_back(state.snapshot(step_index));
}

inline SimState initial_state_without_birth_death(const SimConfig& config, RandomSource& rng)
{
    SimState state(config.rows, config.cols);
    const int states = config.rows * config.cols;
    for (int cell = 0; cell < states; ++cell)
        for (int k = 0; k < config.initial_per_cell; ++k)
            state.add_individual(
                cell, rng.bernoulli(0.5) ? Strategy::Cooperate : Strategy::Defect, states);
    // complete initial graph, every weight tau
    const int n = state.population();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            state.graph.set_edge(i, j, config.tau);
    return state;
}

template <typename StepFn>
RunResult run_loop(const SimConfig& config, StepFn&& do_step)
{
    config.validate();
    RandomSource rng(config.seed);
    const PayoffMatrix matrix = config.payoff_matrix();
    const int states = config.rows * config.cols;

    if (!config.birth_death) {
        SimState state = initial_state_without_birth_death(config, rng);
        RunRecord record;
        record_row(record, state, 0, 0.0, config);
        for (int t = 1; t <= config.horizon; ++t) {
            const double ratio = do_step(state, matrix, t, rng);
            record_row(record, state, t, ratio, config);
        }
        return RunResult{std::move(record), std::move(state)};
    }

    // Alg.-1 nesting: continuous birth/death events interleaved with the
    // discrete update steps whenever the event clock passes integer times.
    SimState state(config.rows, config.cols);
    RunRecord record;
    record_row(record, state, 0, 0.0, config);
    EventSchedule schedule(sample_interarrival(config.lambda, rng));
    double now = 0.0;
    int t_update = 0;
    bool first_cohort_initialized = false;
    auto catch_up = [&](double until) {
        while (t_update < config.horizon && static_cast<double>(t_update) < until) {
            if (!first_cohort_initialized) {
                // the first cohort present at the first discrete step
                // starts fully connected
                const int n = state.population();
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j)
                        state.graph.set_edge(i, j, config.tau);
                first_cohort_initialized = true;
            }
            ++t_update;
            const double ratio = do_step(state, matrix, t_update, rng);
            record_row(record, state, t_update, ratio, config);
        }
    };
    while (now < config.horizon) {
        catch_up(now);
        Event ev = schedule.advance(now, config.lambda, config.lifetime, rng);
        now = ev.time;
        if (now > config.horizon)
            break;
        if (ev.kind == Event::Kind::Birth) {
            const int cell = static_cast<int>(rng.uniform_below(states));
            const int id = state.add_individual(
                cell, rng.bernoulli(0.5) ? Strategy::Cooperate : Strategy::Defect, states);
            (void)id;
            const int slot = state.slot_of_id.at(id);
            for (const int other : state.grid.occupants(cell))
                if (other != slot)
                    state.graph.set_edge(slot, other, config.tau);
        } else {
            auto it = state.slot_of_id.find(ev.individual);
            if (it == state.slot_of_id.end())
                throw std::logic_error("death event for unknown individual");
            state.remove_individual(it->second);
        }
    }
    catch_up(static_cast<double>(config.horizon) + 1.0);
    return RunResult{std::move(record), std::move(state)};
}

} // namespace detail

inline RunResult run(const SimConfig& config)
{
    return detail::run_loop(config,
                            [&config](SimState& state, const PayoffMatrix& matrix, int /*t*/,
                                      RandomSource& rng) {
                                return step(state, config, matrix, rng);
                            });
}

// Heuristic baseline: epsilon starts at 1 and decays by 0.99 each step;
// delta/eta/gamma are ignored.
inline RunResult run_heuristic(const SimConfig& config)
{
    return detail::run_loop(
        config, [&config](SimState& state, const PayoffMatrix& matrix, int t, RandomSource& rng) {
            const double epsilon = std::pow(0.99, t - 1);
            return heuristic_movement_step(state, config, matrix, epsilon, rng);
        });
}

struct HeatmapTable {
    std::vector<double> delta_values;
    std::vector<double> r_values;
    std::vector<std::vector<double>> mean_coop; // [delta][r]
    std::vector<std::vector<double>> mean_nc;   // [delta][r]
};

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream)
{
    std::uint64_t z = master + (stream + 1) * 0x9e3779b97f4a7c15ULL;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

// Replicated (delta, r) sweep; every run owns an independent stream
// derived from (master seed, cell index, replica index).
inline HeatmapTable sweep(const SimConfig& config_template, const std::vector<double>& deltas,
                          const std::vector<double>& rs, int replicas)
{
    if (replicas < 1)
        throw std::invalid_argument("sweep: replicas must be >= 1");
    HeatmapTable table;
    table.delta_values = deltas;
    table.r_values = rs;
    table.mean_coop.assign(deltas.size(), std::vector<double>(rs.size(), 0.0));
    table.mean_nc.assign(deltas.size(), std::vector<double>(rs.size(), 0.0));
    for (std::size_t di = 0; di < deltas.size(); ++di) {
        for (std::size_t ri = 0; ri < rs.size(); ++ri) {
            double coop = 0.0, nc = 0.0;
            for (int rep = 0; rep < replicas; ++rep) {
                SimConfig config = config_template;
                config.delta = deltas[di];
                config.r = rs[ri];
                config.seed = derive_seed(config_template.seed,
                                          (di * rs.size() + ri) * replicas + rep);
                const RunResult result = run(config);
                const RunSummary summary = summarize(result.record, config.horizon);
                coop += summary.mean_coop;
                nc += summary.mean_nc;
            }
            table.mean_coop[di][ri] = coop / replicas;
            table.mean_nc[di][ri] = nc / replicas;
        }
    }
    return table;
}

} // namespace netevo
