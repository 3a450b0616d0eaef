#include "rsbandit/harness/factory.hpp"

#include "rsbandit/bandit/rs.hpp"
#include "rsbandit/errors.hpp"
#include "rsbandit/linear/policies.hpp"
#include "rsbandit/neural/policies.hpp"

#include <random>

namespace rsb {

std::size_t RandomPolicy::select(const FeatureVector&) {
    std::uniform_int_distribution<std::size_t> pick(0, num_actions_ - 1);
    return pick(rng_);
}

std::unique_ptr<Policy> make_policy(const PolicySpec& spec, std::size_t num_actions, std::size_t dim,
                                    std::uint64_t seed, OraclePolicy::Peek peek) {
    const Hyperparameters& hp = spec.hp;
    NeuralConfig net;
    net.width = hp.hidden_width;
    net.depth = hp.depth;
    net.adam.learning_rate = hp.learning_rate;
    net.batch_size = hp.neural_batch;

    switch (spec.kind) {
        case PolicyKind::neuralrs: {
            NeuralRsParams p;
            p.aleph = hp.aleph;
            p.reliability = spec.reliability;
            p.memory_capacity = hp.memory_capacity;
            p.k = hp.knn_k;
            p.knn_eps = hp.knn_eps;
            p.kmeans = CentroidBankParams{hp.centroid_multiplier * num_actions, hp.gamma, hp.centroid_init_std,
                                          hp.kmeans_eps};
            return std::make_unique<NeuralRsPolicy>(num_actions, dim, p, net, seed);
        }
        case PolicyKind::neuralucb:
            return std::make_unique<NeuralUcbPolicy>(num_actions, dim, NeuralUcbParams{hp.neural_nu, hp.neural_lambda},
                                                     net, seed);
        case PolicyKind::neuralts:
            return std::make_unique<NeuralTsPolicy>(num_actions, dim, NeuralUcbParams{hp.neural_nu, hp.neural_lambda},
                                                    net, seed);
        case PolicyKind::reglinrs:
            return std::make_unique<RegLinRsPolicy>(
                num_actions, dim, RegLinRsParams{hp.aleph, hp.memory_capacity, hp.knn_k, hp.knn_eps}, hp.linear_batch);
        case PolicyKind::lingreedy:
            return std::make_unique<LinGreedyPolicy>(num_actions, dim, hp.linear_batch);
        case PolicyKind::linucb:
            return std::make_unique<LinUcbPolicy>(num_actions, dim, hp.linucb_alpha, hp.linear_batch);
        case PolicyKind::lints:
            return std::make_unique<LinTsPolicy>(num_actions, dim,
                                                 LinTsParams{hp.lints_lambda, hp.lints_alpha, hp.lints_beta, 1.0}, seed,
                                                 hp.linear_batch);
        case PolicyKind::rs:
            return std::make_unique<RsPolicy>(num_actions, hp.aleph);
        case PolicyKind::random:
            return std::make_unique<RandomPolicy>(num_actions, seed);
        case PolicyKind::oracle:
            if (!peek) throw InvalidArgument("make_policy: oracle needs access to expected rewards");
            return std::make_unique<OraclePolicy>(num_actions, std::move(peek));
    }
    throw InvalidArgument("make_policy: unknown policy kind");
}

}  // namespace rsb
