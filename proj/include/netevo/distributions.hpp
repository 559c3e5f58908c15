#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <variant>

#include "netevo/rng.hpp"

namespace netevo {

// Lifetime distribution families. Parameters are validated at
// construction; sampling assumes a valid object.

struct PowerLaw {
    double x_min; // lower bound, > 0
    double alpha; // exponent, > 2 so the mean is finite
};

struct Uniform {
    double a;
    double b;
};

struct Exponential {
    double kappa; // death rate
};

struct Lognormal {
    // Parameters of the underlying normal, so the mean is exactly
    // exp(upsilon + phi^2 / 2).
    double upsilon;
    double phi;
};

class LifetimeDistribution {
public:
    using Spec = std::variant<PowerLaw, Uniform, Exponential, Lognormal>;

    explicit LifetimeDistribution(Spec spec) : spec_(spec) { validate(); }

    static LifetimeDistribution power_law(double x_min, double alpha)
    {
        return LifetimeDistribution(PowerLaw{x_min, alpha});
    }
    static LifetimeDistribution uniform(double a, double b)
    {
        return LifetimeDistribution(Uniform{a, b});
    }
    static LifetimeDistribution exponential(double kappa)
    {
        return LifetimeDistribution(Exponential{kappa});
    }
    static LifetimeDistribution lognormal(double upsilon, double phi)
    {
        return LifetimeDistribution(Lognormal{upsilon, phi});
    }

    const Spec& spec() const { return spec_; }

    // Quantile of the power-law family under the simplified inverse
    // transform x = x_min * u^{1/(1-alpha)}, valid for u in (0, 1];
    // 1-u is uniform when u is, so the distribution is unchanged.
    static double power_law_quantile(const PowerLaw& p, double u)
    {
        return p.x_min * std::pow(u, 1.0 / (1.0 - p.alpha));
    }

    double mean() const
    {
        return std::visit(
            [](const auto& d) -> double {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, PowerLaw>)
                    return d.x_min * (d.alpha - 1.0) / (d.alpha - 2.0);
                else if constexpr (std::is_same_v<T, Uniform>)
                    return 0.5 * (d.a + d.b);
                else if constexpr (std::is_same_v<T, Exponential>)
                    return 1.0 / d.kappa;
                else
                    return std::exp(d.upsilon + 0.5 * d.phi * d.phi);
            },
            spec_);
    }

    double sample(RandomSource& rng) const
    {
        return std::visit(
            [&rng](const auto& d) -> double {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, PowerLaw>) {
                    double u = rng.uniform01();
                    while (u == 0.0)
                        u = rng.uniform01();
                    return power_law_quantile(d, u);
                } else if constexpr (std::is_same_v<T, Uniform>) {
                    return d.a + (d.b - d.a) * rng.uniform01();
                } else if constexpr (std::is_same_v<T, Exponential>) {
                    return rng.exponential(d.kappa);
                } else {
                    return std::exp(d.upsilon + d.phi * rng.normal());
                }
            },
            spec_);
    }

    std::string kind() const
    {
        return std::visit(
            [](const auto& d) -> std::string {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, PowerLaw>)
                    return "powerlaw";
                else if constexpr (std::is_same_v<T, Uniform>)
                    return "uniform";
                else if constexpr (std::is_same_v<T, Exponential>)
                    return "exponential";
                else
                    return "lognormal";
            },
            spec_);
    }

private:
    void validate() const
    {
        std::visit(
            [](const auto& d) {
                using T = std::decay_t<decltype(d)>;
                if constexpr (std::is_same_v<T, PowerLaw>) {
                    if (!(d.x_min > 0.0))
                        throw std::invalid_argument("powerlaw: x_min must be > 0");
                    if (!(d.alpha > 2.0))
                        throw std::invalid_argument("powerlaw: alpha must be > 2");
                } else if constexpr (std::is_same_v<T, Uniform>) {
                    if (!(d.a >= 0.0) || !(d.a < d.b))
                        throw std::invalid_argument("uniform: requires 0 <= a < b");
                } else if constexpr (std::is_same_v<T, Exponential>) {
                    if (!(d.kappa > 0.0))
                        throw std::invalid_argument("exponential: kappa must be > 0");
                } else {
                    if (!(d.phi > 0.0))
                        throw std::invalid_argument("lognormal: phi must be > 0");
                }
            },
            spec_);
    }

    Spec spec_;
};

inline double sample_lifetime(const LifetimeDistribution& dist, RandomSource& rng)
{
    return dist.sample(rng);
}

inline double mean_lifetime(const LifetimeDistribution& dist) { return dist.mean(); }

// Inter-arrival time of the birth process (exponential with rate lambda).
inline double sample_interarrival(double lambda, RandomSource& rng)
{
    return rng.exponential(lambda);
}

} // namespace netevo
