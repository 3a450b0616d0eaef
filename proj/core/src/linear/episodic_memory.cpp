#include "rsbandit/linear/episodic_memory.hpp"

#include "rsbandit/errors.hpp"

#include <algorithm>
#include <numeric>

namespace rsb {

EpisodicMemory::EpisodicMemory(std::size_t capacity, std::size_t num_actions, std::size_t dim)
    : num_actions_(num_actions),
      features_(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(capacity)),
      actions_(capacity, 0),
      sequence_(capacity, 0) {
    if (capacity < 1 || num_actions < 1 || dim < 1) throw InvalidArgument("EpisodicMemory: empty shape");
}

void EpisodicMemory::append(const FeatureVector& x, std::size_t action) {
    if (static_cast<Eigen::Index>(x.size()) != features_.rows()) {
        throw InvalidArgument("EpisodicMemory::append: dimension mismatch");
    }
    if (action >= num_actions_) throw InvalidArgument("EpisodicMemory::append: action out of range");
    features_.col(static_cast<Eigen::Index>(next_)) = x;
    actions_[next_] = action;
    sequence_[next_] = inserted_++;
    next_ = (next_ + 1) % capacity();
    size_ = std::min(size_ + 1, capacity());
}

Vector knn_reliability(const FeatureVector& x, const EpisodicMemory& memory, std::size_t k, double eps) {
    if (k < 1) throw InvalidArgument("knn_reliability: k must be positive");
    if (memory.size() < k) {
        throw InvalidArgument("knn_reliability: memory holds " + std::to_string(memory.size()) +
                              " records, need " + std::to_string(k));
    }
    if (static_cast<std::size_t>(x.size()) != memory.dim()) {
        throw InvalidArgument("knn_reliability: dimension mismatch");
    }
    const std::size_t n = memory.size();
    std::vector<double> dist2(n);
    for (std::size_t s = 0; s < n; ++s) dist2[s] = (memory.feature(s) - x).squaredNorm();

    std::vector<std::size_t> slots(n);
    std::iota(slots.begin(), slots.end(), std::size_t{0});
    auto closer = [&](std::size_t a, std::size_t b) {
        if (dist2[a] != dist2[b]) return dist2[a] < dist2[b];
        return memory.sequence(a) < memory.sequence(b);
    };
    std::nth_element(slots.begin(), slots.begin() + static_cast<std::ptrdiff_t>(k - 1), slots.end(), closer);
    slots.resize(k);

    double mean = 0.0;
    for (std::size_t s : slots) mean += dist2[s];
    mean /= static_cast<double>(k);

    Vector phi = Vector::Zero(static_cast<Eigen::Index>(memory.num_actions()));
    double total = 0.0;
    for (std::size_t s : slots) {
        const double sim = mean > 0.0 ? eps / (dist2[s] / mean + eps) : 1.0;
        phi(static_cast<Eigen::Index>(memory.action(s))) += sim;
        total += sim;
    }
    return phi / total;
}

}  // namespace rsb
