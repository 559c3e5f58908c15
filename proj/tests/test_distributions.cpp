#include <doctest.h>

#include <cmath>

#include "netevo/distributions.hpp"

using namespace netevo;

namespace {

double empirical_mean(const LifetimeDistribution& dist, int n, std::uint64_t seed)
{
    RandomSource rng(seed);
    double sum = 0.0;
    for (int i = 0; i < n; ++i)
        sum += sample_lifetime(dist, rng);
    return sum / n;
}

} // namespace

TEST_CASE("power-law quantile endpoints and hand-computed value")
{
    const PowerLaw p{60.0, 3.0};
    // u = 1 corresponds to the lower bound
    CHECK(LifetimeDistribution::power_law_quantile(p, 1.0) == doctest::Approx(60.0));
    // 60 * 0.25^{-1/2} = 120
    CHECK(LifetimeDistribution::power_law_quantile(p, 0.25) == doctest::Approx(120.0));
}

TEST_CASE("power-law samples respect the lower bound")
{
    const auto dist = LifetimeDistribution::power_law(60.0, 3.0);
    RandomSource rng(7);
    for (int i = 0; i < 10000; ++i)
        CHECK(sample_lifetime(dist, rng) >= 60.0);
}

TEST_CASE("uniform samples stay in range and hit the analytic mean")
{
    const auto dist = LifetimeDistribution::uniform(120.0, 150.0);
    RandomSource rng(11);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double x = sample_lifetime(dist, rng);
        CHECK(x >= 120.0);
        CHECK(x <= 150.0);
        sum += x;
    }
    CHECK(std::abs(sum / n - 135.0) / 135.0 < 0.01);
}

TEST_CASE("analytic means match the closed forms")
{
    CHECK(mean_lifetime(LifetimeDistribution::power_law(60.0, 3.0)) == doctest::Approx(120.0));
    CHECK(mean_lifetime(LifetimeDistribution::exponential(0.02)) == doctest::Approx(50.0));
    CHECK(mean_lifetime(LifetimeDistribution::lognormal(3.0, 1.5)) ==
          doctest::Approx(std::exp(4.125)));
    CHECK(mean_lifetime(LifetimeDistribution::uniform(120.0, 150.0)) == doctest::Approx(135.0));
}

TEST_CASE("interarrival sampling: positivity, mean, determinism")
{
    RandomSource rng(3);
    double sum = 0.0;
    const int n = 100000;
    for (int i = 0; i < n; ++i) {
        const double x = sample_interarrival(2.0, rng);
        CHECK(x > 0.0);
        sum += x;
    }
    CHECK(std::abs(sum / n - 0.5) / 0.5 < 0.01);

    RandomSource a(99), b(99);
    for (int i = 0; i < 1000; ++i)
        CHECK(sample_interarrival(5.0, a) == sample_interarrival(5.0, b));
}

TEST_CASE("equal seeds give bitwise-equal sample streams")
{
    const auto dist = LifetimeDistribution::lognormal(3.0, 1.5);
    RandomSource a(123456), b(123456);
    for (int i = 0; i < 1000; ++i)
        CHECK(sample_lifetime(dist, a) == sample_lifetime(dist, b));
}

TEST_CASE("empirical means agree with mean_lifetime for all four families")
{
    const int n = 1000000;
    const double power_mean =
        empirical_mean(LifetimeDistribution::power_law(60.0, 3.0), n, 17);
    CHECK(power_mean >= 118.5);
    CHECK(power_mean <= 121.5);

    struct Case {
        LifetimeDistribution dist;
        double tolerance;
    };
    const Case cases[] = {
        {LifetimeDistribution::power_law(60.0, 3.0), 0.02},
        {LifetimeDistribution::uniform(120.0, 150.0), 0.02},
        {LifetimeDistribution::exponential(0.02), 0.02},
        {LifetimeDistribution::lognormal(3.0, 1.5), 0.05},
    };
    for (const auto& c : cases) {
        const double expected = mean_lifetime(c.dist);
        const double observed = empirical_mean(c.dist, n, 29);
        CHECK(std::abs(observed - expected) / expected < c.tolerance);
    }
}

TEST_CASE("invalid parameters are rejected at construction")
{
    CHECK_THROWS(LifetimeDistribution::power_law(60.0, 2.0));
    CHECK_THROWS(LifetimeDistribution::power_law(-1.0, 3.0));
    CHECK_THROWS(LifetimeDistribution::uniform(150.0, 120.0));
    CHECK_THROWS(LifetimeDistribution::exponential(0.0));
    CHECK_THROWS(LifetimeDistribution::lognormal(1.0, 0.0));
}
