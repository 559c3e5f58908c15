#pragma once

#include <array>
#include <cmath>
#include <cstdint>

namespace netevo {

// Portable seeded generator (xoshiro256** with splitmix64 seeding).
// The algorithm is fixed so that runs replay bit-identically across
// platforms; std::mt19937 + std distributions would not guarantee that.
class RandomSource {
public:
    explicit RandomSource(std::uint64_t seed) : seed_(seed)
    {
        std::uint64_t x = seed;
        for (auto& s : state_)
            s = splitmix64(x);
    }

    // Independent stream for (master_seed, stream_index), e.g. one per
    // sweep replica.
    static RandomSource derived(std::uint64_t master_seed, std::uint64_t stream)
    {
        std::uint64_t x = master_seed;
        std::uint64_t a = splitmix64(x);
        x ^= stream * 0x9e3779b97f4a7c15ULL;
        return RandomSource(a ^ splitmix64(x));
    }

    std::uint64_t seed() const { return seed_; }

    std::uint64_t next_u64()
    {
        const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
        const std::uint64_t t = state_[1] << 17;
        state_[2] ^= state_[0];
        state_[3] ^= state_[1];
        state_[1] ^= state_[2];
        state_[0] ^= state_[3];
        state_[2] ^= t;
        state_[3] = rotl(state_[3], 45);
        return result;
    }

    // Uniform in [0, 1).
    double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform integer in [0, n).
    std::uint64_t uniform_below(std::uint64_t n) { return next_u64() % n; }

    bool bernoulli(double p) { return uniform01() < p; }

    double exponential(double rate) { return -std::log1p(-uniform01()) / rate; }

    // Standard normal via Box-Muller; second variate cached.
    double normal()
    {
        if (has_cached_) {
            has_cached_ = false;
            return cached_;
        }
        double u1 = uniform01();
        double u2 = uniform01();
        while (u1 <= 0.0)
            u1 = uniform01();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * 3.14159265358979323846 * u2;
        cached_ = radius * std::sin(angle);
        has_cached_ = true;
        return radius * std::cos(angle);
    }

private:
    static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

    static std::uint64_t splitmix64(std::uint64_t& x)
    {
        std::uint64_t z = (x += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    std::uint64_t seed_;
    std::array<std::uint64_t, 4> state_{};
    double cached_ = 0.0;
    bool has_cached_ = false;
};

} // namespace netevo
