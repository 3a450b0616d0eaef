#pragma once

#include "rsbandit/bandit/policy.hpp"

#include <cstddef>
#include <vector>

namespace rsb {

/// Risk-sensitive satisficing value (n_i / N) * (E_i - aleph).
double rs_value(std::size_t n_i, std::size_t total, double expected, double aleph);

/// Context-free RS: trial ratio as reliability, incremental sample means as E_i.
class RsPolicy final : public Policy {
public:
    RsPolicy(std::size_t num_actions, double aleph);

    std::size_t select(const FeatureVector& x) override;
    void update(const FeatureVector& x, std::size_t action, double reward) override;

    std::string name() const override { return "rs"; }
    std::size_t num_actions() const override { return counts_.size(); }

    const std::vector<std::size_t>& counts() const noexcept { return counts_; }
    const std::vector<double>& means() const noexcept { return means_; }
    double aleph() const noexcept { return aleph_; }

private:
    double aleph_;
    std::vector<std::size_t> counts_;
    std::vector<double> means_;
    std::size_t total_ = 0;
};

}  // namespace rsb
