#pragma once

#include "rsbandit/bandit/types.hpp"

#include <cstddef>
#include <vector>

namespace rsb {

/// Per-action ridge regression statistics.
///
/// A_i = ridge * I + sum x x^T and b_i = sum r x over the steps action i was
/// played. update() only accumulates; theta and the Cholesky factor used for
/// confidence widths are recomputed by refresh().
class LinearStats {
public:
    LinearStats(std::size_t num_actions, std::size_t dim, double ridge = 1.0);

    void update(const FeatureVector& x, std::size_t action, double reward);
    void refresh();
    void refresh(std::size_t action);

    std::size_t num_actions() const noexcept { return arms_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    double ridge() const noexcept { return ridge_; }

    const Vector& theta(std::size_t action) const { return arms_.at(action).theta; }
    double estimate(std::size_t action, const FeatureVector& x) const { return theta(action).dot(x); }
    Vector estimates(const FeatureVector& x) const;
    /// x^T A^{-1} x using the factor from the last refresh.
    double confidence(std::size_t action, const FeatureVector& x) const;
    /// theta + scale * L^{-T} z with z standard normal, i.e. a draw from
    /// N(theta, scale^2 A^{-1}).
    Vector sample_theta(std::size_t action, double scale, Rng& rng) const;

    const Matrix& precision(std::size_t action) const { return arms_.at(action).a; }
    const Vector& response(std::size_t action) const { return arms_.at(action).b; }
    std::size_t count(std::size_t action) const { return arms_.at(action).count; }

    /// Count and sum of squared rewards as of the last refresh of `action`.
    std::size_t refreshed_count(std::size_t action) const { return arms_.at(action).refreshed_count; }
    double refreshed_reward_sq(std::size_t action) const { return arms_.at(action).refreshed_reward_sq; }
    /// theta^T A theta as of the last refresh.
    double refreshed_quadratic(std::size_t action) const { return arms_.at(action).refreshed_quadratic; }

private:
    struct Arm {
        Matrix a;
        Vector b;
        Vector theta;
        Eigen::LLT<Matrix> llt;
        std::size_t count = 0;
        double reward_sq = 0.0;
        std::size_t refreshed_count = 0;
        double refreshed_reward_sq = 0.0;
        double refreshed_quadratic = 0.0;
    };

    std::size_t dim_;
    double ridge_;
    std::vector<Arm> arms_;
};

}  // namespace rsb
