#pragma once

#include "rsbandit/bandit/types.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace rsb {

/// Ring buffer of (context, chosen action) records. Once full, the oldest
/// record is overwritten.
class EpisodicMemory {
public:
    EpisodicMemory(std::size_t capacity, std::size_t num_actions, std::size_t dim);

    void append(const FeatureVector& x, std::size_t action);

    std::size_t size() const noexcept { return size_; }
    std::size_t capacity() const noexcept { return static_cast<std::size_t>(features_.cols()); }
    std::size_t num_actions() const noexcept { return num_actions_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(features_.rows()); }

    auto feature(std::size_t slot) const { return features_.col(static_cast<Eigen::Index>(slot)); }
    std::size_t action(std::size_t slot) const { return actions_[slot]; }
    /// Monotone insertion counter of the record in `slot`.
    std::uint64_t sequence(std::size_t slot) const { return sequence_[slot]; }

private:
    std::size_t num_actions_;
    Matrix features_;
    std::vector<std::size_t> actions_;
    std::vector<std::uint64_t> sequence_;
    std::size_t size_ = 0;
    std::size_t next_ = 0;
    std::uint64_t inserted_ = 0;
};

/// kNN approximation of the local trial ratio.
///
/// Takes the k records closest to x in squared Euclidean distance (equal
/// distances resolved toward the earlier insertion), weights them with
/// Sim_j = eps / (d2_j / mean(d2) + eps) normalised to sum 1, and returns the
/// weighted average of their one-hot action records.
/// Throws InvalidArgument when the memory holds fewer than k records.
Vector knn_reliability(const FeatureVector& x, const EpisodicMemory& memory, std::size_t k, double eps);

}  // namespace rsb
