#include "rsbandit/linear/policies.hpp"

#include "rsbandit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rsb {

std::size_t lingreedy_select(const FeatureVector& x, const LinearStats& stats) {
    return argmax(stats.estimates(x));
}

std::size_t linucb_select(const FeatureVector& x, const LinearStats& stats, double alpha) {
    Vector scores = stats.estimates(x);
    if (alpha != 0.0) {
        for (std::size_t i = 0; i < stats.num_actions(); ++i) {
            scores(static_cast<Eigen::Index>(i)) += alpha * std::sqrt(stats.confidence(i, x));
        }
    }
    return argmax(scores);
}

std::size_t lints_select(const FeatureVector& x, const LinearStats& stats, const LinTsParams& params, Rng& rng) {
    Vector scores(static_cast<Eigen::Index>(stats.num_actions()));
    for (std::size_t i = 0; i < stats.num_actions(); ++i) {
        const double shape = params.alpha + 0.5 * static_cast<double>(stats.refreshed_count(i));
        const double rate =
            std::max(params.beta + 0.5 * (stats.refreshed_reward_sq(i) - stats.refreshed_quadratic(i)), 1e-12);
        std::gamma_distribution<double> precision(shape, 1.0 / rate);
        const double sigma2 = 1.0 / precision(rng);
        const Vector theta = stats.sample_theta(i, params.variance_scale * std::sqrt(sigma2), rng);
        scores(static_cast<Eigen::Index>(i)) = theta.dot(x);
    }
    return argmax(scores);
}

std::size_t reglinrs_select(const FeatureVector& x, const LinearStats& stats, const Vector& phi, double aleph) {
    if (static_cast<std::size_t>(phi.size()) != stats.num_actions()) {
        throw InvalidArgument("reglinrs_select: reliability length mismatch");
    }
    const Vector values = phi.cwiseProduct((stats.estimates(x).array() - aleph).matrix());
    return argmax(values);
}

LinearPolicyBase::LinearPolicyBase(std::size_t num_actions, std::size_t dim, double ridge,
                                   std::size_t refresh_interval)
    : stats_(num_actions, dim, ridge), refresh_interval_(std::max<std::size_t>(refresh_interval, 1)) {}

void LinearPolicyBase::update(const FeatureVector& x, std::size_t action, double reward) {
    stats_.update(x, action, reward);
    if (++pending_ >= refresh_interval_) {
        stats_.refresh();
        pending_ = 0;
    }
}

LinGreedyPolicy::LinGreedyPolicy(std::size_t num_actions, std::size_t dim, std::size_t refresh_interval)
    : LinearPolicyBase(num_actions, dim, 1.0, refresh_interval) {}

LinUcbPolicy::LinUcbPolicy(std::size_t num_actions, std::size_t dim, double alpha, std::size_t refresh_interval)
    : LinearPolicyBase(num_actions, dim, 1.0, refresh_interval), alpha_(alpha) {}

LinTsPolicy::LinTsPolicy(std::size_t num_actions, std::size_t dim, const LinTsParams& params, std::uint64_t seed,
                         std::size_t refresh_interval)
    : LinearPolicyBase(num_actions, dim, params.lambda, refresh_interval), params_(params), rng_(seed) {}

RegLinRsPolicy::RegLinRsPolicy(std::size_t num_actions, std::size_t dim, const RegLinRsParams& params,
                               std::size_t refresh_interval)
    : LinearPolicyBase(num_actions, dim, 1.0, refresh_interval),
      params_(params),
      memory_(params.memory_capacity, num_actions, dim) {}

Vector RegLinRsPolicy::reliability(const FeatureVector& x) const {
    if (memory_.size() == 0) {
        return Vector::Constant(static_cast<Eigen::Index>(num_actions()), 1.0 / static_cast<double>(num_actions()));
    }
    return knn_reliability(x, memory_, std::min(params_.k, memory_.size()), params_.eps);
}

std::size_t RegLinRsPolicy::select(const FeatureVector& x) {
    return reglinrs_select(x, stats_, reliability(x), params_.aleph);
}

void RegLinRsPolicy::update(const FeatureVector& x, std::size_t action, double reward) {
    memory_.append(x, action);
    LinearPolicyBase::update(x, action, reward);
}

}  // namespace rsb
