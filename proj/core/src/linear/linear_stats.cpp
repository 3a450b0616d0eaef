#include "rsbandit/linear/linear_stats.hpp"

#include "rsbandit/errors.hpp"

#include <random>

namespace rsb {

LinearStats::LinearStats(std::size_t num_actions, std::size_t dim, double ridge) : dim_(dim), ridge_(ridge) {
    if (num_actions < 1 || dim < 1) throw InvalidArgument("LinearStats: empty shape");
    if (!(ridge > 0.0)) throw InvalidArgument("LinearStats: ridge must be positive");
    const auto d = static_cast<Eigen::Index>(dim);
    arms_.resize(num_actions);
    for (auto& arm : arms_) {
        arm.a = ridge * Matrix::Identity(d, d);
        arm.b = Vector::Zero(d);
        arm.theta = Vector::Zero(d);
        arm.llt.compute(arm.a);
    }
}

void LinearStats::update(const FeatureVector& x, std::size_t action, double reward) {
    if (action >= arms_.size()) throw InvalidArgument("LinearStats::update: action out of range");
    if (static_cast<std::size_t>(x.size()) != dim_) throw InvalidArgument("LinearStats::update: dimension mismatch");
    Arm& arm = arms_[action];
    arm.a.noalias() += x * x.transpose();
    arm.b += reward * x;
    ++arm.count;
    arm.reward_sq += reward * reward;
}

void LinearStats::refresh() {
    for (std::size_t i = 0; i < arms_.size(); ++i) refresh(i);
}

void LinearStats::refresh(std::size_t action) {
    Arm& arm = arms_.at(action);
    arm.llt.compute(arm.a);
    if (arm.llt.info() != Eigen::Success) {
        throw InvalidArgument("LinearStats::refresh: precision matrix lost positive definiteness");
    }
    arm.theta = arm.llt.solve(arm.b);
    arm.refreshed_count = arm.count;
    arm.refreshed_reward_sq = arm.reward_sq;
    arm.refreshed_quadratic = arm.theta.dot(arm.b);  // theta^T A theta == theta^T b
}

Vector LinearStats::estimates(const FeatureVector& x) const {
    Vector out(static_cast<Eigen::Index>(arms_.size()));
    for (std::size_t i = 0; i < arms_.size(); ++i) out(static_cast<Eigen::Index>(i)) = estimate(i, x);
    return out;
}

double LinearStats::confidence(std::size_t action, const FeatureVector& x) const {
    const Arm& arm = arms_.at(action);
    const Vector half = arm.llt.matrixL().solve(x);
    return half.squaredNorm();
}

Vector LinearStats::sample_theta(std::size_t action, double scale, Rng& rng) const {
    const Arm& arm = arms_.at(action);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector z(static_cast<Eigen::Index>(dim_));
    for (Eigen::Index j = 0; j < z.size(); ++j) z(j) = gauss(rng);
    if (scale == 0.0) return arm.theta;
    return arm.theta + scale * arm.llt.matrixU().solve(z);
}

}  // namespace rsb
