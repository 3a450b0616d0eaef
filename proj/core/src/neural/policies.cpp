#include "rsbandit/neural/policies.hpp"

#include "rsbandit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace rsb {
namespace {

MlpParams make_params(std::size_t num_actions, std::size_t dim, const NeuralConfig& config, Rng& rng,
                      std::optional<MlpParams>& initial) {
    if (initial) {
        if (initial->num_actions() != num_actions || initial->input_dim() != dim) {
            throw InvalidArgument("neural policy: initial network has the wrong shape");
        }
        return std::move(*initial);
    }
    return MlpParams::he_normal(MlpShape{dim, config.width, config.depth, num_actions}, rng);
}

}  // namespace

double neural_train(MlpParams& params, AdamState& adam, ReplayBuffer& buffer, Rng& rng) {
    const Batch batch = buffer.sample(rng);
    return mlp_train_step(params, adam, batch);
}

std::size_t neuralrs_select(const Vector& outputs, const Vector& rho, double aleph) {
    if (outputs.size() != rho.size()) throw InvalidArgument("neuralrs_select: length mismatch");
    return argmax(Vector(rho.cwiseProduct((outputs.array() - aleph).matrix())));
}

NeuralPolicyBase::NeuralPolicyBase(std::size_t num_actions, std::size_t dim, const NeuralConfig& config,
                                   std::uint64_t seed, std::optional<MlpParams> initial)
    : config_(config),
      rng_(seed),
      params_(make_params(num_actions, dim, config, rng_, initial)),
      adam_(params_, config.adam),
      buffer_(dim, config.batch_size) {}

void NeuralPolicyBase::record_and_train(const FeatureVector& x, std::size_t action, double reward) {
    buffer_.append(x, action, reward);
    if (config_.train) losses_.push_back(neural_train(params_, adam_, buffer_, rng_));
}

NeuralRsPolicy::NeuralRsPolicy(std::size_t num_actions, std::size_t dim, const NeuralRsParams& params,
                               const NeuralConfig& config, std::uint64_t seed, std::optional<MlpParams> initial)
    : NeuralPolicyBase(num_actions, dim, config, seed, std::move(initial)),
      rs_(params),
      counts_(num_actions, 0) {
    switch (rs_.reliability) {
        case ReliabilityKind::knn:
            memory_.emplace(rs_.memory_capacity, num_actions, dim);
            break;
        case ReliabilityKind::kmeans: {
            CentroidBankParams bank = rs_.kmeans;
            if (bank.centroids_per_action == 0) bank.centroids_per_action = 2 * num_actions;
            rs_.kmeans = bank;
            bank_.emplace(num_actions, params_.width(), bank, rng_);
            break;
        }
        case ReliabilityKind::xe:
        case ReliabilityKind::trial_ratio:
            break;
    }
}

Vector NeuralRsPolicy::reliability(const FeatureVector& x, const MlpOutput& out) const {
    const auto k = static_cast<Eigen::Index>(num_actions());
    switch (rs_.reliability) {
        case ReliabilityKind::knn:
            if (memory_->size() == 0) return Vector::Constant(k, 1.0 / static_cast<double>(k));
            return knn_reliability(x, *memory_, std::min(rs_.k, memory_->size()), rs_.knn_eps);
        case ReliabilityKind::kmeans:
            return kmeans_rho(*bank_, all_centroid_weights(out.latent, *bank_));
        case ReliabilityKind::xe:
            return xe_reliability(out.outputs);
        case ReliabilityKind::trial_ratio: {
            std::size_t total = 0;
            for (auto n : counts_) total += n;
            if (total == 0) return Vector::Constant(k, 1.0 / static_cast<double>(k));
            return trial_ratio_reliability(counts_);
        }
    }
    return Vector::Constant(k, 1.0 / static_cast<double>(k));
}

std::size_t NeuralRsPolicy::select(const FeatureVector& x) {
    const MlpOutput out = mlp_forward(params_, x);
    return neuralrs_select(out.outputs, reliability(x, out), rs_.aleph);
}

void NeuralRsPolicy::update(const FeatureVector& x, std::size_t action, double reward) {
    if (action >= num_actions()) throw InvalidArgument("NeuralRsPolicy::update: action out of range");
    ++counts_[action];
    if (memory_) memory_->append(x, action);
    if (bank_) {
        // same network as in select(): training happens below
        const Vector z = mlp_forward(params_, x).latent;
        const Vector w = centroid_weights(centroid_distances(z, *bank_, action), bank_->params().eps);
        centroid_commit(*bank_, action, z, w);
    }
    record_and_train(x, action, reward);
}

NeuralBonusPolicy::NeuralBonusPolicy(std::size_t num_actions, std::size_t dim, const NeuralUcbParams& params,
                                     const NeuralConfig& config, std::uint64_t seed,
                                     std::optional<MlpParams> initial)
    : NeuralPolicyBase(num_actions, dim, config, seed, std::move(initial)), bonus_(params) {
    if (!(params.lambda > 0.0)) throw InvalidArgument("NeuralUCB/TS: lambda must be positive");
    confidence_ = Vector::Constant(static_cast<Eigen::Index>(params_.parameter_count()), params.lambda);
}

Vector NeuralBonusPolicy::variance_terms(const FeatureVector& x) const {
    const std::vector<Vector> grads = output_gradients(params_, x);
    const double width = static_cast<double>(params_.width());
    Vector out(static_cast<Eigen::Index>(grads.size()));
    for (std::size_t i = 0; i < grads.size(); ++i) {
        out(static_cast<Eigen::Index>(i)) = (grads[i].array().square() / confidence_.array()).sum() / width;
    }
    return out;
}

void NeuralBonusPolicy::update(const FeatureVector& x, std::size_t action, double reward) {
    if (action >= num_actions()) throw InvalidArgument("NeuralBonusPolicy::update: action out of range");
    const std::vector<Vector> grads = output_gradients(params_, x);
    confidence_.array() += grads[action].array().square();
    record_and_train(x, action, reward);
}

NeuralUcbPolicy::NeuralUcbPolicy(std::size_t num_actions, std::size_t dim, const NeuralUcbParams& params,
                                 const NeuralConfig& config, std::uint64_t seed, std::optional<MlpParams> initial)
    : NeuralBonusPolicy(num_actions, dim, params, config, seed, std::move(initial)) {}

Vector NeuralUcbPolicy::exploration_bonus(const FeatureVector& x) const {
    return bonus_.nu * variance_terms(x).cwiseSqrt();
}

std::size_t NeuralUcbPolicy::select(const FeatureVector& x) {
    Vector scores = mlp_forward(params_, x).outputs;
    if (bonus_.nu != 0.0) scores += exploration_bonus(x);
    return argmax(scores);
}

NeuralTsPolicy::NeuralTsPolicy(std::size_t num_actions, std::size_t dim, const NeuralUcbParams& params,
                               const NeuralConfig& config, std::uint64_t seed, std::optional<MlpParams> initial)
    : NeuralBonusPolicy(num_actions, dim, params, config, seed, std::move(initial)) {}

std::size_t NeuralTsPolicy::select(const FeatureVector& x) {
    const Vector mean = mlp_forward(params_, x).outputs;
    const Vector var = variance_terms(x);
    std::normal_distribution<double> gauss(0.0, 1.0);
    Vector scores(mean.size());
    for (Eigen::Index i = 0; i < mean.size(); ++i) {
        scores(i) = mean(i) + bonus_.nu * std::sqrt(var(i)) * gauss(rng_);
    }
    return argmax(scores);
}

}  // namespace rsb
