#pragma once

#include "rsbandit/env/dataset.hpp"

#include <cstddef>
#include <cstdint>

namespace rsb {

struct ArtificialConfig {
    std::size_t dim = 64;
    std::size_t num_actions = 4;
    double target_top_mean = 0.7;
    std::size_t num_points = 10000;
    double context_noise_std = 0.01;
    // Number of distinct noise-free base contexts; 0 means one per point.
    std::size_t pool_size = 100;
    std::uint64_t seed = 0;

    bool operator==(const ArtificialConfig&) const = default;
};

/// Linear-reward synthetic dataset.
///
/// Draws unit-norm action parameters and unit-sphere base contexts, maps the
/// dot products through p = clip(0.5 + scale * theta_i . x, 0, 1) with `scale`
/// chosen by bisection so the noise-free best-arm mean hits target_top_mean,
/// then serves each base context with isotropic Gaussian noise.
BanditDataset generate_artificial(const ArtificialConfig& cfg);

}  // namespace rsb
