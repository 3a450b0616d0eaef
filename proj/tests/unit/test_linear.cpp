#include "rsbandit/errors.hpp"
#include "rsbandit/linear/episodic_memory.hpp"
#include "rsbandit/linear/linear_stats.hpp"
#include "rsbandit/linear/policies.hpp"

#include <doctest.h>

#include <Eigen/QR>

#include <random>

using namespace rsb;

namespace {

struct Record {
    Vector x;
    std::size_t action;
    double reward;
};

// Ridge solution from the stacked design matrix, solved by QR.
Vector batch_theta(const std::vector<Record>& records, std::size_t count, std::size_t action, std::size_t dim,
                   double ridge) {
    std::vector<const Record*> rows;
    for (std::size_t i = 0; i < count; ++i)
        if (records[i].action == action) rows.push_back(&records[i]);
    Matrix design(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
    Vector y(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        design.row(static_cast<Eigen::Index>(i)) = rows[i]->x.transpose();
        y(static_cast<Eigen::Index>(i)) = rows[i]->reward;
    }
    const Matrix a = ridge * Matrix::Identity(dim, dim) + design.transpose() * design;
    return a.colPivHouseholderQr().solve(design.transpose() * y);
}

std::vector<Record> random_records(std::size_t n, std::size_t dim, std::size_t actions, Rng& rng) {
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u;
    std::uniform_int_distribution<std::size_t> pick(0, actions - 1);
    std::vector<Record> out;
    for (std::size_t i = 0; i < n; ++i) {
        Vector x(dim);
        for (auto& v : x) v = g(rng);
        out.push_back({x, pick(rng), u(rng)});
    }
    return out;
}

}  // namespace

TEST_CASE("LinearStats refresh matches the batch ridge solution") {
    Rng rng(31);
    const auto records = random_records(200, 8, 3, rng);
    LinearStats stats(3, 8);
    for (std::size_t t = 0; t < records.size(); ++t) {
        stats.update(records[t].x, records[t].action, records[t].reward);
        if ((t + 1) % 17 == 0 || t + 1 == records.size()) {
            stats.refresh();
            for (std::size_t a = 0; a < 3; ++a)
                CHECK((stats.theta(a) - batch_theta(records, t + 1, a, 8, 1.0)).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
}

TEST_CASE("LinearStats accessors and confidence") {
    LinearStats stats(2, 2, 0.5);
    Vector x(2);
    x << 1, 0;
    stats.update(x, 0, 1.0);
    stats.refresh();
    CHECK(stats.precision(0)(0, 0) == doctest::Approx(1.5));
    CHECK(stats.response(0)(0) == doctest::Approx(1.0));
    CHECK(stats.count(0) == 1);
    CHECK(stats.count(1) == 0);
    CHECK(stats.theta(0)(0) == doctest::Approx(1.0 / 1.5));
    CHECK(stats.confidence(0, x) == doctest::Approx(1.0 / 1.5));
    CHECK(stats.confidence(1, x) == doctest::Approx(2.0));
    CHECK(stats.estimates(x)(1) == 0.0);
    CHECK_THROWS_AS(stats.update(Vector::Ones(3), 0, 1.0), InvalidArgument);
}

TEST_CASE("LinearStats sample_theta has the posterior mean and zero-scale collapse") {
    Rng rng(8);
    const auto records = random_records(60, 3, 1, rng);
    LinearStats stats(1, 3);
    for (const auto& r : records) stats.update(r.x, 0, r.reward);
    stats.refresh();
    CHECK((stats.sample_theta(0, 0.0, rng) - stats.theta(0)).norm() == 0.0);
    Vector mean = Vector::Zero(3);
    const int draws = 20000;
    for (int i = 0; i < draws; ++i) mean += stats.sample_theta(0, 1.0, rng);
    mean /= draws;
    CHECK((mean - stats.theta(0)).cwiseAbs().maxCoeff() < 0.01);
}

TEST_CASE("linear policies re-solve every refresh interval") {
    Rng rng(17);
    const auto records = random_records(200, 5, 4, rng);
    LinUcbPolicy policy(4, 5, 0.1, 20);
    for (std::size_t t = 0; t < records.size(); ++t) {
        policy.update(records[t].x, records[t].action, records[t].reward);
        const std::size_t solved = (t + 1) / 20 * 20;
        for (std::size_t a = 0; a < 4; ++a) {
            const Vector expect = batch_theta(records, solved, a, 5, 1.0);
            CHECK((policy.stats().theta(a) - expect).cwiseAbs().maxCoeff() < 1e-9);
        }
    }
    policy.end_warmup();
    CHECK((policy.stats().theta(0) - batch_theta(records, 200, 0, 5, 1.0)).cwiseAbs().maxCoeff() < 1e-9);
}

TEST_CASE("LinUCB with alpha 0 is greedy and the bonus favours untried arms") {
    Rng rng(2);
    const auto records = random_records(100, 4, 3, rng);
    LinUcbPolicy ucb0(3, 4, 0.0, 1);
    LinGreedyPolicy greedy(3, 4, 1);
    for (const auto& r : records) {
        ucb0.update(r.x, r.action, r.reward);
        greedy.update(r.x, r.action, r.reward);
    }
    for (const auto& r : random_records(50, 4, 3, rng)) CHECK(ucb0.select(r.x) == greedy.select(r.x));

    LinearStats stats(2, 2);
    Vector x(2);
    x << 1, 1;
    for (int i = 0; i < 50; ++i) stats.update(x, 0, 0.5);
    stats.refresh();
    CHECK(linucb_select(x, stats, 0.0) == 0);
    CHECK(linucb_select(x, stats, 10.0) == 1);
}

TEST_CASE("LinTS with zero variance scale is greedy, and is seed deterministic") {
    Rng rng(3);
    const auto records = random_records(80, 4, 3, rng);
    LinearStats stats(3, 4, 0.25);
    for (const auto& r : records) stats.update(r.x, r.action, r.reward);
    stats.refresh();
    LinTsParams params;
    params.variance_scale = 0.0;
    for (const auto& r : random_records(40, 4, 3, rng)) CHECK(lints_select(r.x, stats, params, rng) == lingreedy_select(r.x, stats));

    LinTsPolicy a(3, 4, LinTsParams{}, 99);
    LinTsPolicy b(3, 4, LinTsParams{}, 99);
    for (const auto& r : records) {
        a.update(r.x, r.action, r.reward);
        b.update(r.x, r.action, r.reward);
    }
    for (const auto& r : records) CHECK(a.select(r.x) == b.select(r.x));
}

TEST_CASE("LinTS explores symmetric arms evenly") {
    LinearStats stats(2, 1, 0.25);
    Vector x(1);
    x << 1;
    for (int i = 0; i < 10; ++i) {
        stats.update(x, 0, i % 2);
        stats.update(x, 1, i % 2);
    }
    stats.refresh();
    Rng rng(10);
    int zero = 0;
    const int n = 10000;
    for (int i = 0; i < n; ++i) zero += lints_select(x, stats, LinTsParams{}, rng) == 0;
    CHECK(zero / static_cast<double>(n) == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("reglinrs_select examples") {
    LinearStats stats(2, 1);
    Vector x(1);
    x << 1;
    for (int i = 0; i < 100; ++i) stats.update(x, 0, 0.8);
    for (int i = 0; i < 100; ++i) stats.update(x, 1, 0.5);
    stats.refresh();
    Vector phi(2);
    phi << 0.5, 0.5;
    CHECK(reglinrs_select(x, stats, phi, 0.65) == 0);
    // both below aleph: the lightly tried arm is explored
    phi << 0.9, 0.1;
    CHECK(reglinrs_select(x, stats, phi, 0.9) == 1);
}

TEST_CASE("EpisodicMemory ring buffer") {
    EpisodicMemory mem(3, 2, 1);
    for (int i = 0; i < 5; ++i) mem.append(Vector::Constant(1, i), static_cast<std::size_t>(i % 2));
    CHECK(mem.size() == 3);
    CHECK(mem.capacity() == 3);
    // slots hold records 3, 4, 2
    CHECK(mem.feature(0)(0) == 3.0);
    CHECK(mem.feature(2)(0) == 2.0);
    CHECK(mem.sequence(1) == 4);
    CHECK_THROWS_AS(mem.append(Vector::Zero(2), 0), InvalidArgument);
    CHECK_THROWS_AS(mem.append(Vector::Zero(1), 2), InvalidArgument);
}

TEST_CASE("knn_reliability hand computed example") {
    EpisodicMemory mem(10, 2, 2);
    Vector p(2);
    p << 1, 0;
    mem.append(p, 0);
    p << 0, 1;
    mem.append(p, 0);
    p << 2, 0;
    mem.append(p, 1);
    const double eps = 1e-4;
    // squared distances 1, 1, 4 with mean 2
    const double s_near = eps / (0.5 + eps);
    const double s_far = eps / (2.0 + eps);
    const double total = 2 * s_near + s_far;
    const Vector rho = knn_reliability(Vector::Zero(2), mem, 3, eps);
    CHECK(rho(0) == doctest::Approx(2 * s_near / total).epsilon(1e-12));
    CHECK(rho(1) == doctest::Approx(s_far / total).epsilon(1e-12));
    CHECK_THROWS_AS(knn_reliability(Vector::Zero(2), mem, 4, eps), InvalidArgument);
}

TEST_CASE("knn_reliability uses the k nearest and handles identical points") {
    EpisodicMemory mem(10, 3, 1);
    for (int i = 0; i < 4; ++i) mem.append(Vector::Constant(1, 0.0), 0);
    for (int i = 0; i < 4; ++i) mem.append(Vector::Constant(1, 5.0), 1);
    const Vector near0 = knn_reliability(Vector::Constant(1, 0.0), mem, 4, 1e-4);
    CHECK(near0(0) == doctest::Approx(1.0));
    CHECK(near0(2) == 0.0);

    EpisodicMemory same(5, 2, 1);
    same.append(Vector::Zero(1), 0);
    same.append(Vector::Zero(1), 1);
    const Vector even = knn_reliability(Vector::Zero(1), same, 2, 1e-4);
    CHECK(even(0) == doctest::Approx(0.5));
}

TEST_CASE("RegLinRsPolicy reliability") {
    RegLinRsParams params;
    params.k = 3;
    RegLinRsPolicy policy(2, 1, params);
    Vector x(1);
    x << 0.5;
    CHECK(policy.reliability(x)(0) == doctest::Approx(0.5));
    policy.update(x, 1, 1.0);
    CHECK(policy.reliability(x)(1) == doctest::Approx(1.0));
    policy.update(x, 0, 1.0);
    policy.update(x, 0, 0.0);
    policy.update(x, 0, 0.0);
    CHECK(policy.memory().size() == 4);
    CHECK(policy.reliability(x).sum() == doctest::Approx(1.0));
}
