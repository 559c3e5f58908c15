#pragma once

#include <cmath>
#include <cstdint>
#include <queue>
#include <stdexcept>
#include <utility>
#include <vector>

#include "netevo/distributions.hpp"
#include "netevo/rng.hpp"

namespace netevo {

// Continuous-time M/G/infinity event engine: Poisson births, deaths at the
// end of individually sampled lifetimes.

struct Event {
    enum class Kind { Birth, Death };
    Kind kind;
    double time;
    int individual; // newborn id on Birth, dying id on Death
};

class EventSchedule {
public:
    EventSchedule(double first_birth_time, int first_id = 0)
        : next_birth_time_(first_birth_time), next_id_(first_id)
    {
    }

    double next_birth_time() const { return next_birth_time_; }

    bool has_pending_death() const { return !deaths_.empty(); }

    double next_death_time() const { return deaths_.top().first; }

    void schedule_death(double time, int id) { deaths_.emplace(time, id); }

    std::size_t pending_deaths() const { return deaths_.size(); }

    // Pops the earlier of next birth / next death. On birth, samples the
    // newborn's death time and the next inter-arrival.
    Event advance(double /*now*/, double lambda, const LifetimeDistribution& dist,
                  RandomSource& rng)
    {
        if (!has_pending_death() || next_birth_time_ < next_death_time()) {
            Event ev{Event::Kind::Birth, next_birth_time_, next_id_++};
            deaths_.emplace(ev.time + sample_lifetime(dist, rng), ev.individual);
            next_birth_time_ = ev.time + sample_interarrival(lambda, rng);
            return ev;
        }
        auto [time, id] = deaths_.top();
        deaths_.pop();
        return Event{Event::Kind::Death, time, id};
    }

private:
    using Entry = std::pair<double, int>; // (death time, id)
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> deaths_;
    double next_birth_time_;
    int next_id_;
};

struct PopulationTrace {
    std::vector<std::pair<double, int>> samples; // (time, count)
};

// Limiting pmf of the population size: Poisson with mean
// lambda * E[G], evaluated in log-space so large means do not overflow.
inline double limiting_pmf(double lambda, const LifetimeDistribution& dist, int i)
{
    if (i < 0)
        throw std::invalid_argument("limiting_pmf: i must be >= 0");
    const double m = lambda * mean_lifetime(dist);
    const double log_p = i * std::log(m) - m - std::lgamma(i + 1.0);
    return std::exp(log_p);
}

struct SteadyStateMoments {
    double mean;
    double variance;
    double mean_sojourn;
};

inline SteadyStateMoments steady_state_moments(double lambda, const LifetimeDistribution& dist)
{
    const double eg = mean_lifetime(dist);
    return {lambda * eg, lambda * eg, eg};
}

// Runs the pure queue from an empty system and samples the population at
// every integer time in [1, horizon]. Used for validating the limiting
// results at desk scale.
inline PopulationTrace simulate_population(double lambda, const LifetimeDistribution& dist,
                                           int horizon, RandomSource& rng)
{
    PopulationTrace trace;
    trace.samples.reserve(horizon);
    EventSchedule schedule(sample_interarrival(lambda, rng));
    double now = 0.0;
    int population = 0;
    int next_sample = 1;
    while (true) {
        const double next_event = schedule.has_pending_death()
            ? std::min(schedule.next_birth_time(), schedule.next_death_time())
            : schedule.next_birth_time();
        while (next_sample <= horizon && next_sample <= next_event) {
            trace.samples.emplace_back(static_cast<double>(next_sample), population);
            ++next_sample;
        }
        if (next_sample > horizon)
            break;
        Event ev = schedule.advance(now, lambda, dist, rng);
        now = ev.time;
        population += ev.kind == Event::Kind::Birth ? 1 : -1;
    }
    return trace;
}

} // namespace netevo
