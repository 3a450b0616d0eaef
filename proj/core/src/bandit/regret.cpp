#include "rsbandit/bandit/types.hpp"

#include "rsbandit/errors.hpp"

#include <algorithm>

namespace rsb {

void RegretTrace::append(const StepOutcome& outcome) {
    const Vector& p = outcome.expected_rewards;
    if (p.size() == 0 || outcome.chosen_action >= static_cast<std::size_t>(p.size())) {
        throw InvalidArgument("RegretTrace::append: chosen action outside expected reward row");
    }
    const double best = p.maxCoeff();
    const double got = p(static_cast<Eigen::Index>(outcome.chosen_action));
    const double previous = empty() ? 0.0 : cumulative_regret_.back();
    const double previous_reward = empty() ? 0.0 : cumulative_reward_.back();
    const bool correct = got >= best;

    cumulative_regret_.push_back(previous + std::max(0.0, best - got));
    cumulative_reward_.push_back(previous_reward + outcome.observed_reward);
    correct_ += correct ? 1 : 0;
    correct_flags_.push_back(correct);
    correct_rate_.push_back(static_cast<double>(correct_) / static_cast<double>(cumulative_regret_.size()));
    chosen_actions_.push_back(outcome.chosen_action);
}

void RegretTrace::reserve(std::size_t n) {
    cumulative_regret_.reserve(n);
    cumulative_reward_.reserve(n);
    correct_rate_.reserve(n);
    chosen_actions_.reserve(n);
    correct_flags_.reserve(n);
}

double RegretTrace::trailing_accuracy(std::size_t window) const {
    if (empty()) return 0.0;
    window = std::min(window, size());
    if (window == 0) return 0.0;
    const auto hits = std::count(correct_flags_.end() - static_cast<std::ptrdiff_t>(window), correct_flags_.end(), true);
    return static_cast<double>(hits) / static_cast<double>(window);
}

RegretTrace regret_update(RegretTrace trace, const StepOutcome& outcome) {
    trace.append(outcome);
    return trace;
}

double subjective_regret(const std::vector<double>& values, double aleph) {
    if (values.empty()) throw InvalidArgument("subjective_regret: empty series");
    double total = 0.0;
    for (double p : values) total += aleph - p;
    return total;
}

}  // namespace rsb
