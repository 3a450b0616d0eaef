#pragma once

#include "rsbandit/numeric/mlp.hpp"

#include <cstddef>
#include <cstdint>

namespace rsb {

struct GradientCheckOptions {
    double step = 1e-5;
    // Nets with at most this many weights are checked exhaustively,
    // larger ones on `sample_size` uniformly drawn weights.
    std::size_t exhaustive_limit = 4096;
    std::size_t sample_size = 256;
    // Relative error is |a - n| / max(|a|, |n|, denominator_floor).
    double denominator_floor = 1e-5;
    std::uint64_t seed = 20240501;
};

struct GradientCheckReport {
    double max_relative_error = 0.0;
    std::size_t checked = 0;
    // Weights whose +/- step moved a ReLU across its kink; finite
    // differences are not a valid reference there.
    std::size_t skipped_at_kink = 0;
};

/// Central finite differences against the analytic loss gradient.
GradientCheckReport gradient_check_report(const MlpParams& params, const Batch& batch,
                                          const LayerGradients& analytic,
                                          const GradientCheckOptions& options = {});

/// Max relative error between the backprop gradient and finite differences.
double gradient_check(const MlpParams& params, const Batch& batch, const GradientCheckOptions& options = {});

}  // namespace rsb
