#include "rsbandit/numeric/mlp.hpp"

#include "rsbandit/errors.hpp"
#include "rsbandit/numeric/adam.hpp"

#include <cmath>
#include <string>

namespace rsb {
namespace {

struct ForwardTrace {
    std::vector<Matrix> pre;         // pre-activation of every layer
    std::vector<Matrix> activation;  // ReLU(pre[l]) for l < depth-1
};

ForwardTrace forward_trace(const MlpParams& params, const Matrix& inputs) {
    const std::size_t depth = params.depth();
    ForwardTrace tr;
    tr.pre.resize(depth);
    tr.activation.resize(depth - 1);
    tr.pre[0].noalias() = params.layer(0) * inputs;
    for (std::size_t l = 1; l < depth; ++l) {
        tr.activation[l - 1] = tr.pre[l - 1].cwiseMax(0.0);
        tr.pre[l].noalias() = params.layer(l) * tr.activation[l - 1];
    }
    return tr;
}

void backward(const MlpParams& params, const Matrix& inputs, const ForwardTrace& tr, Matrix delta,
              std::vector<Matrix>& grad) {
    for (std::size_t l = params.depth(); l-- > 0;) {
        const Matrix& in = (l == 0) ? inputs : tr.activation[l - 1];
        grad[l].noalias() = delta * in.transpose();
        if (l > 0) {
            Matrix upstream = params.layer(l).transpose() * delta;
            delta = upstream.cwiseProduct((tr.pre[l - 1].array() > 0.0).cast<double>().matrix());
        }
    }
}

void check_batch(const MlpParams& params, const Batch& batch) {
    if (batch.size() == 0) throw InvalidArgument("mlp: empty batch");
    if (static_cast<std::size_t>(batch.inputs.cols()) != batch.size() ||
        static_cast<std::size_t>(batch.rewards.size()) != batch.size()) {
        throw InvalidArgument("mlp: batch columns, actions and rewards differ in length");
    }
    if (static_cast<std::size_t>(batch.inputs.rows()) != params.input_dim()) {
        throw InvalidArgument("mlp: batch input dimension " + std::to_string(batch.inputs.rows()) +
                              " != " + std::to_string(params.input_dim()));
    }
    for (std::size_t a : batch.actions) {
        if (a >= params.num_actions()) throw InvalidArgument("mlp: action index out of range");
    }
}

}  // namespace

MlpParams::MlpParams(std::vector<Matrix> layers) : layers_(std::move(layers)) {
    if (layers_.size() < 2) throw InvalidArgument("MlpParams: depth must be at least 2");
    const Eigen::Index width = layers_.front().rows();
    if (width < 1 || layers_.front().cols() < 1) throw InvalidArgument("MlpParams: empty first layer");
    for (std::size_t l = 1; l < layers_.size(); ++l) {
        if (layers_[l].cols() != layers_[l - 1].rows()) {
            throw InvalidArgument("MlpParams: layer " + std::to_string(l) + " does not chain");
        }
        if (l + 1 < layers_.size() && layers_[l].rows() != width) {
            throw InvalidArgument("MlpParams: hidden layers must all have the same width");
        }
    }
    if (layers_.back().rows() < 1) throw InvalidArgument("MlpParams: no output units");
    for (const auto& w : layers_) {
        if (!w.allFinite()) throw InvalidArgument("MlpParams: non-finite weight");
    }
}

MlpParams MlpParams::he_normal(const MlpShape& shape, Rng& rng) {
    if (shape.input_dim < 1 || shape.width < 1 || shape.depth < 2 || shape.num_actions < 1) {
        throw InvalidArgument("MlpParams::he_normal: invalid shape");
    }
    std::vector<Matrix> layers;
    layers.reserve(shape.depth);
    auto gaussian = [&rng](Eigen::Index rows, Eigen::Index cols) {
        std::normal_distribution<double> dist(0.0, std::sqrt(2.0 / static_cast<double>(cols)));
        Matrix m(rows, cols);
        for (Eigen::Index j = 0; j < cols; ++j)
            for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = dist(rng);
        return m;
    };
    const auto d = static_cast<Eigen::Index>(shape.input_dim);
    const auto g = static_cast<Eigen::Index>(shape.width);
    layers.push_back(gaussian(g, d));
    for (std::size_t l = 1; l + 1 < shape.depth; ++l) layers.push_back(gaussian(g, g));
    layers.push_back(gaussian(static_cast<Eigen::Index>(shape.num_actions), g));
    return MlpParams(std::move(layers));
}

std::size_t MlpParams::parameter_count() const noexcept {
    std::size_t n = 0;
    for (const auto& w : layers_) n += static_cast<std::size_t>(w.size());
    return n;
}

double MlpParams::output_scale() const noexcept { return std::sqrt(static_cast<double>(width())); }

LayerGradients zeros_like(const MlpParams& params) {
    LayerGradients out;
    out.reserve(params.depth());
    for (const auto& w : params.layers()) out.push_back(Matrix::Zero(w.rows(), w.cols()));
    return out;
}

Vector flatten(const std::vector<Matrix>& layers) {
    Eigen::Index total = 0;
    for (const auto& w : layers) total += w.size();
    Vector out(total);
    Eigen::Index offset = 0;
    for (const auto& w : layers) {
        out.segment(offset, w.size()) = Eigen::Map<const Vector>(w.data(), w.size());
        offset += w.size();
    }
    return out;
}

Batch Batch::from_samples(std::span<const Sample> samples) {
    Batch b;
    if (samples.empty()) return b;
    const Eigen::Index d = samples.front().x.size();
    b.inputs.resize(d, static_cast<Eigen::Index>(samples.size()));
    b.rewards.resize(static_cast<Eigen::Index>(samples.size()));
    b.actions.reserve(samples.size());
    for (std::size_t i = 0; i < samples.size(); ++i) {
        if (samples[i].x.size() != d) throw InvalidArgument("Batch: ragged feature vectors");
        b.inputs.col(static_cast<Eigen::Index>(i)) = samples[i].x;
        b.actions.push_back(samples[i].action);
        b.rewards(static_cast<Eigen::Index>(i)) = samples[i].reward;
    }
    return b;
}

MlpOutput mlp_forward(const MlpParams& params, const Vector& x) {
    if (static_cast<std::size_t>(x.size()) != params.input_dim()) {
        throw InvalidArgument("mlp_forward: input dimension " + std::to_string(x.size()) +
                              " != " + std::to_string(params.input_dim()));
    }
    const ForwardTrace tr = forward_trace(params, x);
    MlpOutput out;
    out.outputs = params.output_scale() * tr.pre.back().col(0);
    out.latent = tr.activation.back().col(0);
    return out;
}

Matrix mlp_forward_batch(const MlpParams& params, const Matrix& inputs) {
    if (static_cast<std::size_t>(inputs.rows()) != params.input_dim()) {
        throw InvalidArgument("mlp_forward_batch: input dimension mismatch");
    }
    return params.output_scale() * forward_trace(params, inputs).pre.back();
}

double mlp_loss(const MlpParams& params, const Batch& batch) {
    check_batch(params, batch);
    const Matrix out = mlp_forward_batch(params, batch.inputs);
    double loss = 0.0;
    for (std::size_t b = 0; b < batch.size(); ++b) {
        const double r = out(static_cast<Eigen::Index>(batch.actions[b]), static_cast<Eigen::Index>(b)) -
                         batch.rewards(static_cast<Eigen::Index>(b));
        loss += 0.5 * r * r;
    }
    return loss;
}

double mlp_loss_and_gradient(const MlpParams& params, const Batch& batch, LayerGradients& grad) {
    check_batch(params, batch);
    if (grad.size() != params.depth()) grad = zeros_like(params);
    const ForwardTrace tr = forward_trace(params, batch.inputs);
    const double scale = params.output_scale();
    const Matrix& top = tr.pre.back();
    Matrix delta = Matrix::Zero(top.rows(), top.cols());
    double loss = 0.0;
    for (std::size_t b = 0; b < batch.size(); ++b) {
        const auto a = static_cast<Eigen::Index>(batch.actions[b]);
        const auto col = static_cast<Eigen::Index>(b);
        const double residual = scale * top(a, col) - batch.rewards(col);
        loss += 0.5 * residual * residual;
        delta(a, col) = scale * residual;
    }
    backward(params, batch.inputs, tr, std::move(delta), grad);
    return loss;
}

std::vector<Vector> output_gradients(const MlpParams& params, const Vector& x) {
    if (static_cast<std::size_t>(x.size()) != params.input_dim()) {
        throw InvalidArgument("output_gradients: input dimension mismatch");
    }
    const Matrix inputs = x;
    const ForwardTrace tr = forward_trace(params, inputs);
    const std::size_t k = params.num_actions();
    std::vector<Vector> out;
    out.reserve(k);
    LayerGradients grad = zeros_like(params);
    for (std::size_t i = 0; i < k; ++i) {
        Matrix delta = Matrix::Zero(static_cast<Eigen::Index>(k), 1);
        delta(static_cast<Eigen::Index>(i), 0) = params.output_scale();
        backward(params, inputs, tr, std::move(delta), grad);
        out.push_back(flatten(grad));
    }
    return out;
}

double mlp_train_step(MlpParams& params, AdamState& adam, const Batch& batch) {
    LayerGradients grad = zeros_like(params);
    const double loss = mlp_loss_and_gradient(params, batch, grad);
    bool finite = std::isfinite(loss);
    for (const auto& g : grad) finite = finite && g.allFinite();
    if (!finite) throw TrainingDivergence("mlp_train_step: non-finite loss or gradient");
    adam.apply(params, grad);
    return loss;
}

}  // namespace rsb
