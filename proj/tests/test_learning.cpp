#include <doctest.h>

#include <array>
#include <cmath>

#include "netevo/learning.hpp"

using namespace netevo;

TEST_CASE("q_update: full overwrite, mixed case, zero learning rate")
{
    QTable q(4);
    q.set(1, Action::Up, 7.0);
    q_update(q, 1, Action::Up, 3.0, 2, 1.0, 0.0);
    CHECK(q.get(1, Action::Up) == doctest::Approx(3.0));

    QTable q2(4);
    q2.set(3, Action::Left, 4.0); // max over next state
    q_update(q2, 0, Action::Stay, 2.0, 3, 0.5, 0.5);
    CHECK(q2.get(0, Action::Stay) == doctest::Approx(2.0));

    QTable q3(4);
    q3.set(0, Action::Down, -1.5);
    q_update(q3, 0, Action::Down, 100.0, 1, 0.0, 0.5);
    CHECK(q3.get(0, Action::Down) == doctest::Approx(-1.5));
}

TEST_CASE("q_update only touches the (state, action) entry")
{
    QTable q(3);
    for (int s = 0; s < 3; ++s)
        for (int a = 0; a < kActionCount; ++a)
            q.set(s, static_cast<Action>(a), s * 10.0 + a);
    QTable before = q;
    q_update(q, 1, Action::Right, 5.0, 2, 0.3, 0.7);
    for (int s = 0; s < 3; ++s)
        for (int a = 0; a < kActionCount; ++a) {
            if (s == 1 && static_cast<Action>(a) == Action::Right)
                continue;
            CHECK(q.get(s, static_cast<Action>(a)) == before.get(s, static_cast<Action>(a)));
        }
}

TEST_CASE("q_update contracts toward the target")
{
    RandomSource rng(31);
    for (int trial = 0; trial < 1000; ++trial) {
        QTable q(2);
        const double old = 10.0 * (rng.uniform01() - 0.5);
        const double next_max = 10.0 * (rng.uniform01() - 0.5);
        const double reward = 4.0 * (rng.uniform01() - 0.5);
        const double eta = 0.05 + 0.95 * rng.uniform01();
        const double gamma = 0.9 * rng.uniform01();
        q.set(0, Action::Stay, old);
        q.set(1, Action::Left, next_max);
        const double target = reward + gamma * q.row_max(1);
        q_update(q, 0, Action::Stay, reward, 1, eta, gamma);
        CHECK(std::abs(q.get(0, Action::Stay) - target) ==
              doctest::Approx((1.0 - eta) * std::abs(old - target)).epsilon(1e-9));
    }
}

TEST_CASE("Q entries stay bounded by R_max / (1 - gamma)")
{
    const double r_max = 2.0;
    const double gamma = 0.6;
    const double bound = r_max / (1.0 - gamma);
    RandomSource rng(47);
    QTable q(5);
    for (int i = 0; i < 20000; ++i) {
        const int s = static_cast<int>(rng.uniform_below(5));
        const int s_next = static_cast<int>(rng.uniform_below(5));
        const auto a = static_cast<Action>(rng.uniform_below(kActionCount));
        const double reward = r_max * (2.0 * rng.uniform01() - 1.0);
        const double eta = 0.05 + 0.95 * rng.uniform01();
        q_update(q, s, a, reward, s_next, eta, gamma);
    }
    for (int s = 0; s < 5; ++s)
        for (int a = 0; a < kActionCount; ++a)
            CHECK(std::abs(q.get(s, static_cast<Action>(a))) <= bound + 1e-9);
}

TEST_CASE("select_action: pure exploitation with a unique maximum")
{
    QTable q(2);
    q.set(0, Action::Right, 5.0);
    RandomSource rng(9);
    for (int i = 0; i < 1000; ++i)
        CHECK(select_action(q, 0, 1.0, rng) == Action::Right);
}

TEST_CASE("select_action frequencies: exploration and tie-breaking are uniform")
{
    QTable q(1);
    const int n = 100000;

    for (const double delta : {0.0, 1.0}) {
        RandomSource rng(delta == 0.0 ? 55 : 56);
        std::array<int, kActionCount> counts{};
        for (int i = 0; i < n; ++i)
            ++counts[static_cast<int>(select_action(q, 0, delta, rng))];
        for (const int c : counts)
            CHECK(std::abs(static_cast<double>(c) / n - 1.0 / 6.0) < 0.01);
    }
}

TEST_CASE("argmax is invariant under adding a constant to the row")
{
    QTable q(1), shifted(1);
    const double values[kActionCount] = {0.3, -1.2, 2.5, 2.5, 0.0, 1.1};
    for (int a = 0; a < kActionCount; ++a) {
        q.set(0, static_cast<Action>(a), values[a]);
        shifted.set(0, static_cast<Action>(a), values[a] + 100.0);
    }
    RandomSource rng_a(77), rng_b(77);
    for (int i = 0; i < 2000; ++i)
        CHECK(select_action(q, 0, 1.0, rng_a) == select_action(shifted, 0, 1.0, rng_b));
}

TEST_CASE("heuristic_step moves only on strict improvement")
{
    RandomSource rng(13);

    // epsilon = 0: never moves
    CHECK(heuristic_step(7, 0.0, {{6, 100.0}}, 0.0, rng) == 7);

    // strict improvement: picks the best neighbor
    for (int i = 0; i < 100; ++i)
        CHECK(heuristic_step(7, 1.0, {{6, 5.0}, {8, 2.0}}, 3.0, rng) == 6);

    // all neighbors equal to current: stays
    for (int i = 0; i < 100; ++i)
        CHECK(heuristic_step(7, 1.0, {{6, 3.0}, {8, 3.0}}, 3.0, rng) == 7);
}
