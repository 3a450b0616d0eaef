#include "rsbandit/reliability/centroid_bank.hpp"

#include "rsbandit/errors.hpp"

#include <cmath>
#include <random>

namespace rsb {

CentroidBank::CentroidBank(std::size_t num_actions, std::size_t latent_dim, const CentroidBankParams& params,
                           Rng& rng)
    : latent_dim_(latent_dim), params_(params) {
    if (num_actions < 1 || latent_dim < 1 || params.centroids_per_action < 1) {
        throw InvalidArgument("CentroidBank: empty shape");
    }
    if (!(params.gamma > 0.0 && params.gamma <= 1.0)) throw InvalidArgument("CentroidBank: gamma outside (0, 1]");
    if (!(params.eps > 0.0) || !(params.init_std >= 0.0)) throw InvalidArgument("CentroidBank: invalid eps or std");
    std::normal_distribution<double> gauss(0.0, params.init_std);
    const auto d = static_cast<Eigen::Index>(latent_dim);
    const auto m = static_cast<Eigen::Index>(params.centroids_per_action);
    for (std::size_t i = 0; i < num_actions; ++i) {
        Matrix c(d, m);
        for (Eigen::Index col = 0; col < m; ++col)
            for (Eigen::Index row = 0; row < d; ++row) c(row, col) = params.init_std > 0.0 ? gauss(rng) : 0.0;
        centroids_.push_back(std::move(c));
        weights_.push_back(Vector::Zero(m));
        counts_.push_back(0.0);
    }
}

void CentroidBank::set_action_state(std::size_t action, Matrix centroids, Vector cumulative_weights, double count) {
    if (action >= num_actions()) throw InvalidArgument("CentroidBank::set_action_state: action out of range");
    if (centroids.rows() != static_cast<Eigen::Index>(latent_dim_) ||
        centroids.cols() != static_cast<Eigen::Index>(centroids_per_action()) ||
        cumulative_weights.size() != centroids.cols()) {
        throw InvalidArgument("CentroidBank::set_action_state: shape mismatch");
    }
    if (count < 0.0 || (cumulative_weights.array() < 0.0).any()) {
        throw InvalidArgument("CentroidBank::set_action_state: negative mass");
    }
    centroids_[action] = std::move(centroids);
    weights_[action] = std::move(cumulative_weights);
    counts_[action] = count;
}

Vector centroid_distances(const Vector& z, const CentroidBank& bank, std::size_t action) {
    if (static_cast<std::size_t>(z.size()) != bank.latent_dim()) {
        throw InvalidArgument("centroid_distances: latent dimension mismatch");
    }
    return (bank.centroids(action).colwise() - z).colwise().norm().transpose();
}

Vector centroid_weights(const Vector& distances, double eps) {
    return (distances.array() + eps).inverse().matrix();
}

std::vector<Vector> all_centroid_weights(const Vector& z, const CentroidBank& bank) {
    std::vector<Vector> out;
    out.reserve(bank.num_actions());
    for (std::size_t i = 0; i < bank.num_actions(); ++i) {
        out.push_back(centroid_weights(centroid_distances(z, bank, i), bank.params().eps));
    }
    return out;
}

Vector kmeans_rho(const CentroidBank& bank, const std::vector<Vector>& weights) {
    if (weights.size() != bank.num_actions()) throw InvalidArgument("kmeans_rho: need weights for every action");
    Vector n_bar(static_cast<Eigen::Index>(bank.num_actions()));
    const double m = static_cast<double>(bank.centroids_per_action());
    for (std::size_t i = 0; i < bank.num_actions(); ++i) {
        n_bar(static_cast<Eigen::Index>(i)) = bank.count(i) / m * weights[i].sum();
    }
    return softmax(n_bar);
}

Vector convex_centroid_update(const Vector& c, double cumulative_weight, const Vector& z, double weight) {
    if (c.size() != z.size()) throw InvalidArgument("convex_centroid_update: dimension mismatch");
    // std::lerp stays inside [c_j, z_j] where the quotient form can overshoot by an ulp
    const double t = weight / (cumulative_weight + weight);
    Vector out(c.size());
    for (Eigen::Index j = 0; j < c.size(); ++j) out(j) = std::lerp(c(j), z(j), t);
    return out;
}

void centroid_commit(CentroidBank& bank, std::size_t chosen, const Vector& z, const Vector& weights) {
    if (chosen >= bank.num_actions()) throw InvalidArgument("centroid_commit: action out of range");
    if (weights.size() != static_cast<Eigen::Index>(bank.centroids_per_action())) {
        throw InvalidArgument("centroid_commit: weight count mismatch");
    }
    if (static_cast<std::size_t>(z.size()) != bank.latent_dim()) {
        throw InvalidArgument("centroid_commit: latent dimension mismatch");
    }
    Matrix& c = bank.centroids_[chosen];
    Vector& big_w = bank.weights_[chosen];
    for (Eigen::Index m = 0; m < c.cols(); ++m) {
        c.col(m) = convex_centroid_update(c.col(m), big_w(m), z, weights(m));
    }
    const double gamma = bank.params_.gamma;
    for (std::size_t i = 0; i < bank.num_actions(); ++i) {
        bank.weights_[i] *= gamma;
        bank.counts_[i] *= gamma;
    }
    big_w += weights;
    bank.counts_[chosen] += 1.0;
}

}  // namespace rsb
