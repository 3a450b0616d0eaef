#pragma once

#include "rsbandit/numeric/linalg.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace rsb {

struct MlpShape {
    std::size_t input_dim = 0;
    std::size_t width = 128;
    std::size_t depth = 2;  // number of weight matrices, >= 2
    std::size_t num_actions = 0;
};

/// Weights of a bias-free ReLU perceptron with one output unit per action.
///
/// Layer 0 is width x input_dim, layers 1..depth-2 are width x width and the
/// last layer is num_actions x width. The forward pass scales the last
/// pre-activation by sqrt(width).
class MlpParams {
public:
    explicit MlpParams(std::vector<Matrix> layers);

    /// Gaussian init with std sqrt(2 / fan_in) per layer.
    static MlpParams he_normal(const MlpShape& shape, Rng& rng);

    const std::vector<Matrix>& layers() const noexcept { return layers_; }
    const Matrix& layer(std::size_t i) const { return layers_.at(i); }
    Matrix& layer(std::size_t i) { return layers_.at(i); }

    std::size_t input_dim() const noexcept { return static_cast<std::size_t>(layers_.front().cols()); }
    std::size_t width() const noexcept { return static_cast<std::size_t>(layers_.front().rows()); }
    std::size_t depth() const noexcept { return layers_.size(); }
    std::size_t num_actions() const noexcept { return static_cast<std::size_t>(layers_.back().rows()); }
    std::size_t parameter_count() const noexcept;
    double output_scale() const noexcept;

private:
    std::vector<Matrix> layers_;
};

/// Per-layer gradient, shaped like MlpParams::layers().
using LayerGradients = std::vector<Matrix>;

LayerGradients zeros_like(const MlpParams& params);
Vector flatten(const std::vector<Matrix>& layers);

struct Sample {
    Vector x;
    std::size_t action = 0;
    double reward = 0.0;
};

/// Column-per-sample training batch.
struct Batch {
    Matrix inputs;
    std::vector<std::size_t> actions;
    Vector rewards;

    std::size_t size() const noexcept { return actions.size(); }
    static Batch from_samples(std::span<const Sample> samples);
};

struct MlpOutput {
    Vector outputs;  // one estimate per action
    Vector latent;   // penultimate activation, length width
};

MlpOutput mlp_forward(const MlpParams& params, const Vector& x);

/// Outputs for every column of `inputs` (num_actions x batch).
Matrix mlp_forward_batch(const MlpParams& params, const Matrix& inputs);

/// 1/2 * sum_b (f_{a_b}(x_b) - r_b)^2.
double mlp_loss(const MlpParams& params, const Batch& batch);

/// Loss plus its gradient w.r.t. every weight. Only the output unit of the
/// recorded action receives error for each sample.
double mlp_loss_and_gradient(const MlpParams& params, const Batch& batch, LayerGradients& grad);

/// Gradient of output unit `action` at x w.r.t. all weights, flattened in
/// layer order (column-major within a layer). One entry per action.
std::vector<Vector> output_gradients(const MlpParams& params, const Vector& x);

class AdamState;

/// One Adam step on the batch loss. Returns the pre-step loss; throws
/// TrainingDivergence (leaving params untouched) when it is not finite.
double mlp_train_step(MlpParams& params, AdamState& adam, const Batch& batch);

}  // namespace rsb
