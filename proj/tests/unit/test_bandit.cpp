#include "rsbandit/bandit/rs.hpp"
#include "rsbandit/bandit/types.hpp"
#include "rsbandit/env/dataset.hpp"
#include "rsbandit/errors.hpp"
#include "rsbandit/harness/simulation.hpp"

#include <doctest.h>

using namespace rsb;

namespace {

StepOutcome outcome(std::size_t action, double reward, std::vector<double> expected) {
    StepOutcome o;
    o.chosen_action = action;
    o.observed_reward = reward;
    o.expected_rewards = Eigen::Map<Vector>(expected.data(), static_cast<Eigen::Index>(expected.size()));
    return o;
}

}  // namespace

TEST_CASE("rs_value examples") {
    CHECK(rs_value(5, 10, 0.8, 0.65) == doctest::Approx(0.075));
    CHECK(rs_value(1, 10, 0.5, 0.65) == doctest::Approx(-0.015));
    CHECK(rs_value(0, 10, 0.9, 0.65) == 0.0);
    CHECK_THROWS_AS(rs_value(0, 0, 0.5, 0.6), InvalidArgument);
    CHECK_THROWS_AS(rs_value(3, 2, 0.5, 0.6), InvalidArgument);
}

TEST_CASE("RS exploits a satisficing arm and explores under-achievers") {
    SUBCASE("pessimistic exploitation") {
        // E0 > aleph > E1, arm 0 heavily tried
        RsPolicy p(2, 0.6);
        for (int i = 0; i < 9; ++i) p.update(Vector(), 0, 0.8);
        p.update(Vector(), 1, 0.3);
        CHECK(p.select(Vector()) == 0);
    }
    SUBCASE("optimistic exploration picks the smaller n_i (aleph - E_i)") {
        RsPolicy p(2, 0.6);
        for (int i = 0; i < 8; ++i) p.update(Vector(), 0, 0.5);
        p.update(Vector(), 1, 0.2);
        p.update(Vector(), 1, 0.2);
        // n0 (aleph - E0) = 0.8, n1 (aleph - E1) = 0.8 -> tie, lowest index
        CHECK(p.select(Vector()) == 0);
        p.update(Vector(), 0, 0.5);
        CHECK(p.select(Vector()) == 1);
    }
}

TEST_CASE("RS argmax agrees with direct enumeration") {
    Rng rng(4);
    std::uniform_real_distribution<double> u;
    std::uniform_int_distribution<int> n(1, 20);
    for (int trial = 0; trial < 500; ++trial) {
        RsPolicy p(3, 0.6);
        std::vector<std::size_t> counts(3);
        std::vector<double> sums(3, 0.0);
        for (std::size_t a = 0; a < 3; ++a) {
            counts[a] = static_cast<std::size_t>(n(rng));
            for (std::size_t i = 0; i < counts[a]; ++i) {
                const double r = u(rng);
                sums[a] += r;
                p.update(Vector(), a, r);
            }
        }
        const std::size_t total = counts[0] + counts[1] + counts[2];
        std::vector<double> values;
        for (std::size_t a = 0; a < 3; ++a) values.push_back(rs_value(counts[a], total, sums[a] / counts[a], 0.6));
        CHECK(p.select(Vector()) == argmax(std::span<const double>(values)));
    }
}

TEST_CASE("RsPolicy bookkeeping") {
    RsPolicy p(3, 0.5);
    CHECK(p.select(Vector()) == 0);
    p.update(Vector(), 2, 1.0);
    p.update(Vector(), 2, 0.0);
    CHECK(p.counts()[2] == 2);
    CHECK(p.means()[2] == doctest::Approx(0.5));
    CHECK_THROWS_AS(p.update(Vector(), 3, 0.0), InvalidArgument);
}

TEST_CASE("RegretTrace accumulates regret, reward and accuracy") {
    RegretTrace t;
    t.append(outcome(0, 1.0, {0.7, 0.5}));
    t.append(outcome(1, 0.0, {0.7, 0.5}));
    t.append(outcome(1, 1.0, {0.6, 0.6}));
    CHECK(t.size() == 3);
    CHECK(t.cumulative_regret()[0] == 0.0);
    CHECK(t.cumulative_regret()[1] == doctest::Approx(0.2));
    CHECK(t.final_regret() == doctest::Approx(0.2));
    CHECK(t.cumulative_reward()[2] == doctest::Approx(2.0));
    CHECK(t.correct_rate()[1] == doctest::Approx(0.5));
    CHECK(t.correct_rate()[2] == doctest::Approx(2.0 / 3.0));
    CHECK(t.correct_count() == 2);
    CHECK(t.trailing_accuracy(2) == doctest::Approx(0.5));
    CHECK(t.chosen_actions() == std::vector<std::size_t>{0, 1, 1});
    CHECK_THROWS_AS(t.append(outcome(5, 0.0, {0.1, 0.2})), InvalidArgument);
}

TEST_CASE("regret is non-decreasing and zero for the best arm") {
    Rng rng(12);
    std::uniform_real_distribution<double> u;
    RegretTrace t;
    for (int i = 0; i < 1000; ++i) {
        std::vector<double> p{u(rng), u(rng), u(rng)};
        t = regret_update(std::move(t), outcome(static_cast<std::size_t>(i % 3), 0.0, p));
    }
    for (std::size_t i = 1; i < t.size(); ++i) CHECK(t.cumulative_regret()[i] >= t.cumulative_regret()[i - 1]);

    RegretTrace best;
    for (int i = 0; i < 100; ++i) best.append(outcome(0, 1.0, {0.9, 0.1}));
    CHECK(best.final_regret() == 0.0);
}

TEST_CASE("subjective_regret") {
    CHECK(subjective_regret({0.5, 0.5}, 0.6) == doctest::Approx(0.2));
    CHECK(subjective_regret({0.9}, 0.6) == doctest::Approx(-0.3));
    CHECK_THROWS_AS(subjective_regret({}, 0.6), InvalidArgument);
}

TEST_CASE("basic RS has bounded regret growth on a stationary bandit") {
    const BanditDataset ds = make_stationary({0.7, 0.5});
    PolicySpec spec;
    spec.label = "rs";
    spec.kind = PolicyKind::rs;
    spec.hp.aleph = 0.6;
    double at_5k = 0.0;
    double at_10k = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RunResult r = run_simulation(spec, ds, 10000, seed);
        at_5k += r.trace.cumulative_regret()[4999];
        at_10k += r.trace.cumulative_regret()[9999];
    }
    CHECK(at_10k - at_5k < 0.05 * at_5k);
}
