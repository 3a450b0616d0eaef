#pragma once

#include "rsbandit/bandit/types.hpp"

#include <cstddef>
#include <map>
#include <ostream>
#include <string>
#include <vector>

namespace rsb {

enum class RewardKind { bernoulli, deterministic };

/// Contexts and per-action expected rewards, one column per row of data.
struct BanditDataset {
    std::string name;
    Matrix contexts;          // dim x rows
    Matrix expected_rewards;  // num_actions x rows, entries in [0, 1]
    RewardKind reward_kind = RewardKind::bernoulli;
    std::map<std::string, std::string> metadata;

    std::size_t size() const noexcept { return static_cast<std::size_t>(contexts.cols()); }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(contexts.rows()); }
    std::size_t num_actions() const noexcept { return static_cast<std::size_t>(expected_rewards.rows()); }

    FeatureVector context(std::size_t row) const { return contexts.col(static_cast<Eigen::Index>(row)); }
    Vector expected(std::size_t row) const { return expected_rewards.col(static_cast<Eigen::Index>(row)); }

    /// Throws InvalidArgument when shapes or reward ranges are inconsistent.
    void validate() const;
};

/// Plays `action` on data row `row`. Bernoulli datasets draw the reward,
/// deterministic ones return the expected value.
StepOutcome env_step(const BanditDataset& ds, std::size_t row, std::size_t action, Rng& rng);

/// Row visiting order for one run: a shuffled pass over the data, extended by
/// uniform draws with replacement when `steps` exceeds the row count.
std::vector<std::size_t> episode_order(std::size_t rows, std::size_t steps, Rng& rng);

/// A context-free Bernoulli bandit: one row with a constant scalar context.
BanditDataset make_stationary(const std::vector<double>& means, RewardKind kind = RewardKind::bernoulli);

/// CSV with header x0..x{d-1},p0..p{K-1}.
void write_csv(const BanditDataset& ds, std::ostream& out);

std::string to_string(RewardKind kind);

}  // namespace rsb
