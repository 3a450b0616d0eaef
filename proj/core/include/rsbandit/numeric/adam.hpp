#pragma once

#include "rsbandit/numeric/mlp.hpp"

#include <cstdint>
#include <vector>

namespace rsb {

struct AdamConfig {
    double learning_rate = 1e-3;
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

class AdamState {
public:
    AdamState(const MlpParams& params, AdamConfig config = {});

    /// Applies one bias-corrected Adam update in place.
    void apply(MlpParams& params, const LayerGradients& grad);

    std::uint64_t step_count() const noexcept { return step_; }
    const AdamConfig& config() const noexcept { return config_; }
    const std::vector<Matrix>& first_moment() const noexcept { return m_; }
    const std::vector<Matrix>& second_moment() const noexcept { return v_; }

private:
    AdamConfig config_;
    std::vector<Matrix> m_;
    std::vector<Matrix> v_;
    std::uint64_t step_ = 0;
};

}  // namespace rsb
