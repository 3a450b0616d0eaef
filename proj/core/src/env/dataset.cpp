#include "rsbandit/env/dataset.hpp"

#include "rsbandit/errors.hpp"
#include "rsbandit/format.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace rsb {

void BanditDataset::validate() const {
    if (contexts.cols() != expected_rewards.cols()) {
        throw InvalidArgument("BanditDataset '" + name + "': contexts and rewards differ in length");
    }
    if (contexts.rows() < 1 || expected_rewards.rows() < 1) {
        throw InvalidArgument("BanditDataset '" + name + "': empty feature or action dimension");
    }
    if (!contexts.allFinite()) throw InvalidArgument("BanditDataset '" + name + "': non-finite context");
    if (!expected_rewards.allFinite() || expected_rewards.minCoeff() < 0.0 || expected_rewards.maxCoeff() > 1.0) {
        throw InvalidArgument("BanditDataset '" + name + "': expected rewards outside [0, 1]");
    }
}

StepOutcome env_step(const BanditDataset& ds, std::size_t row, std::size_t action, Rng& rng) {
    if (row >= ds.size()) throw InvalidArgument("env_step: row out of range");
    if (action >= ds.num_actions()) throw InvalidArgument("env_step: action out of range");
    StepOutcome out;
    out.chosen_action = action;
    out.step = row;
    out.expected_rewards = ds.expected(row);
    const double p = out.expected_rewards(static_cast<Eigen::Index>(action));
    if (ds.reward_kind == RewardKind::deterministic) {
        out.observed_reward = p;
    } else {
        std::uniform_real_distribution<double> u(0.0, 1.0);
        out.observed_reward = u(rng) < p ? 1.0 : 0.0;
    }
    return out;
}

std::vector<std::size_t> episode_order(std::size_t rows, std::size_t steps, Rng& rng) {
    if (rows == 0) throw InvalidArgument("episode_order: empty dataset");
    std::vector<std::size_t> order(rows);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::shuffle(order.begin(), order.end(), rng);
    if (steps <= rows) {
        order.resize(steps);
        return order;
    }
    std::uniform_int_distribution<std::size_t> pick(0, rows - 1);
    order.reserve(steps);
    while (order.size() < steps) order.push_back(pick(rng));
    return order;
}

BanditDataset make_stationary(const std::vector<double>& means, RewardKind kind) {
    BanditDataset ds;
    ds.name = "stationary";
    ds.reward_kind = kind;
    ds.contexts = Matrix::Ones(1, 1);
    ds.expected_rewards = Eigen::Map<const Vector>(means.data(), static_cast<Eigen::Index>(means.size()));
    ds.validate();
    return ds;
}

void write_csv(const BanditDataset& ds, std::ostream& out) {
    for (std::size_t j = 0; j < ds.dim(); ++j) out << (j ? "," : "") << 'x' << j;
    for (std::size_t i = 0; i < ds.num_actions(); ++i) out << ",p" << i;
    out << '\n';
    for (Eigen::Index t = 0; t < ds.contexts.cols(); ++t) {
        for (Eigen::Index j = 0; j < ds.contexts.rows(); ++j) {
            out << (j ? "," : "") << format_double(ds.contexts(j, t));
        }
        for (Eigen::Index i = 0; i < ds.expected_rewards.rows(); ++i) {
            out << ',' << format_double(ds.expected_rewards(i, t));
        }
        out << '\n';
    }
}

std::string to_string(RewardKind kind) {
    return kind == RewardKind::bernoulli ? "bernoulli" : "deterministic";
}

}  // namespace rsb
