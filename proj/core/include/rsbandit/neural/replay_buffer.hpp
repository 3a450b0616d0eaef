#pragma once

#include "rsbandit/bandit/types.hpp"
#include "rsbandit/numeric/mlp.hpp"

#include <cstddef>
#include <vector>

namespace rsb {

/// Unbounded history of (context, action, reward) used for minibatch training.
class ReplayBuffer {
public:
    explicit ReplayBuffer(std::size_t dim, std::size_t max_batch = 1024);

    void append(const FeatureVector& x, std::size_t action, double reward);

    std::size_t size() const noexcept { return actions_.size(); }
    bool empty() const noexcept { return actions_.empty(); }
    std::size_t dim() const noexcept { return dim_; }
    std::size_t max_batch() const noexcept { return max_batch_; }

    /// min(size, max_batch) entries drawn uniformly without replacement.
    Batch sample(Rng& rng);

    /// Entries per action.
    std::vector<std::size_t> action_counts(std::size_t num_actions) const;

private:
    std::size_t dim_;
    std::size_t max_batch_;
    std::vector<double> features_;
    std::vector<std::size_t> actions_;
    std::vector<double> rewards_;
    std::vector<std::size_t> permutation_;
};

}  // namespace rsb
