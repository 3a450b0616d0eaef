#pragma once

#include "rsbandit/numeric/linalg.hpp"

#include <cstddef>
#include <vector>

namespace rsb {

/// d-dimensional context handed to the agent each step.
using FeatureVector = Vector;

/// What happened at one step. `expected_rewards` is the environment's hidden
/// truth and is only used for regret accounting.
struct StepOutcome {
    std::size_t chosen_action = 0;
    double observed_reward = 0.0;
    Vector expected_rewards;
    std::size_t step = 0;
};

/// Per-step series for a single simulation run.
class RegretTrace {
public:
    RegretTrace() = default;

    /// Appends one step: regret grows by max_i p_i - p_chosen.
    void append(const StepOutcome& outcome);
    void reserve(std::size_t n);

    std::size_t size() const noexcept { return cumulative_regret_.size(); }
    bool empty() const noexcept { return cumulative_regret_.empty(); }

    const std::vector<double>& cumulative_regret() const noexcept { return cumulative_regret_; }
    const std::vector<double>& cumulative_reward() const noexcept { return cumulative_reward_; }
    /// Running fraction of steps that picked an argmax action.
    const std::vector<double>& correct_rate() const noexcept { return correct_rate_; }
    const std::vector<std::size_t>& chosen_actions() const noexcept { return chosen_actions_; }

    double final_regret() const noexcept { return empty() ? 0.0 : cumulative_regret_.back(); }
    std::size_t correct_count() const noexcept { return correct_; }
    /// Fraction of correct choices among the last `window` steps.
    double trailing_accuracy(std::size_t window) const;

private:
    std::vector<double> cumulative_regret_;
    std::vector<double> cumulative_reward_;
    std::vector<double> correct_rate_;
    std::vector<std::size_t> chosen_actions_;
    std::vector<bool> correct_flags_;
    std::size_t correct_ = 0;
};

/// Functional form of RegretTrace::append.
RegretTrace regret_update(RegretTrace trace, const StepOutcome& outcome);

/// Sum over steps of (aleph - p_t). Negative when the agent over-achieves.
double subjective_regret(const std::vector<double>& values, double aleph);

}  // namespace rsb
