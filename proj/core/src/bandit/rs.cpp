#include "rsbandit/bandit/rs.hpp"

#include "rsbandit/errors.hpp"

namespace rsb {

double rs_value(std::size_t n_i, std::size_t total, double expected, double aleph) {
    if (total == 0) throw InvalidArgument("rs_value: no trials yet");
    if (n_i > total) throw InvalidArgument("rs_value: action count exceeds total");
    return static_cast<double>(n_i) / static_cast<double>(total) * (expected - aleph);
}

RsPolicy::RsPolicy(std::size_t num_actions, double aleph)
    : aleph_(aleph), counts_(num_actions, 0), means_(num_actions, 0.0) {
    if (num_actions < 1) throw InvalidArgument("RsPolicy: need at least one action");
}

std::size_t RsPolicy::select(const FeatureVector& /*x*/) {
    if (total_ == 0) return 0;
    std::vector<double> values(counts_.size());
    for (std::size_t i = 0; i < counts_.size(); ++i) values[i] = rs_value(counts_[i], total_, means_[i], aleph_);
    return argmax(values);
}

void RsPolicy::update(const FeatureVector& /*x*/, std::size_t action, double reward) {
    if (action >= counts_.size()) throw InvalidArgument("RsPolicy::update: action out of range");
    ++counts_[action];
    ++total_;
    means_[action] += (reward - means_[action]) / static_cast<double>(counts_[action]);
}

}  // namespace rsb
