#include "rsbandit/numeric/adam.hpp"

#include "rsbandit/errors.hpp"

#include <cmath>

namespace rsb {

AdamState::AdamState(const MlpParams& params, AdamConfig config)
    : config_(config), m_(zeros_like(params)), v_(zeros_like(params)) {
    if (!(config_.learning_rate > 0.0) || !(config_.beta1 >= 0.0 && config_.beta1 < 1.0) ||
        !(config_.beta2 >= 0.0 && config_.beta2 < 1.0) || !(config_.epsilon > 0.0)) {
        throw InvalidArgument("AdamState: invalid hyperparameters");
    }
}

void AdamState::apply(MlpParams& params, const LayerGradients& grad) {
    if (grad.size() != m_.size()) {
        throw InvalidArgument("AdamState::apply: gradient layer count mismatch");
    }
    ++step_;
    const double t = static_cast<double>(step_);
    const double c1 = 1.0 - std::pow(config_.beta1, t);
    const double c2 = 1.0 - std::pow(config_.beta2, t);
    for (std::size_t l = 0; l < m_.size(); ++l) {
        const Matrix& g = grad[l];
        m_[l] = config_.beta1 * m_[l] + (1.0 - config_.beta1) * g;
        v_[l] = config_.beta2 * v_[l] + (1.0 - config_.beta2) * g.cwiseProduct(g);
        params.layer(l).array() -=
            config_.learning_rate * (m_[l].array() / c1) / ((v_[l].array() / c2).sqrt() + config_.epsilon);
    }
}

}  // namespace rsb
