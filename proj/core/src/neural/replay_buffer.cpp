#include "rsbandit/neural/replay_buffer.hpp"

#include "rsbandit/errors.hpp"

#include <random>

namespace rsb {

ReplayBuffer::ReplayBuffer(std::size_t dim, std::size_t max_batch) : dim_(dim), max_batch_(max_batch) {
    if (dim < 1 || max_batch < 1) throw InvalidArgument("ReplayBuffer: empty shape");
}

void ReplayBuffer::append(const FeatureVector& x, std::size_t action, double reward) {
    if (static_cast<std::size_t>(x.size()) != dim_) throw InvalidArgument("ReplayBuffer::append: dimension mismatch");
    if (!(reward >= 0.0 && reward <= 1.0)) throw InvalidArgument("ReplayBuffer::append: reward outside [0, 1]");
    features_.insert(features_.end(), x.data(), x.data() + x.size());
    actions_.push_back(action);
    rewards_.push_back(reward);
    permutation_.push_back(actions_.size() - 1);
}

Batch ReplayBuffer::sample(Rng& rng) {
    if (empty()) throw InvalidArgument("ReplayBuffer::sample: buffer is empty");
    const std::size_t n = size();
    const std::size_t take = std::min(n, max_batch_);
    if (take < n) {
        // partial Fisher-Yates over the persistent permutation
        for (std::size_t i = 0; i < take; ++i) {
            std::uniform_int_distribution<std::size_t> pick(i, n - 1);
            std::swap(permutation_[i], permutation_[pick(rng)]);
        }
    }
    Batch batch;
    batch.inputs.resize(static_cast<Eigen::Index>(dim_), static_cast<Eigen::Index>(take));
    batch.rewards.resize(static_cast<Eigen::Index>(take));
    batch.actions.resize(take);
    for (std::size_t i = 0; i < take; ++i) {
        const std::size_t src = take < n ? permutation_[i] : i;
        batch.inputs.col(static_cast<Eigen::Index>(i)) =
            Eigen::Map<const Vector>(features_.data() + src * dim_, static_cast<Eigen::Index>(dim_));
        batch.actions[i] = actions_[src];
        batch.rewards(static_cast<Eigen::Index>(i)) = rewards_[src];
    }
    return batch;
}

std::vector<std::size_t> ReplayBuffer::action_counts(std::size_t num_actions) const {
    std::vector<std::size_t> counts(num_actions, 0);
    for (std::size_t a : actions_) {
        if (a < num_actions) ++counts[a];
    }
    return counts;
}

}  // namespace rsb
