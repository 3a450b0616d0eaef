#pragma once

#include "rsbandit/numeric/linalg.hpp"

#include <cstddef>
#include <vector>

namespace rsb {

struct CentroidBankParams {
    std::size_t centroids_per_action = 8;  // M; the default config uses 2K
    double gamma = 0.99;
    double init_std = 1.0;
    double eps = 1e-8;
};

/// Online k-means state in latent space: M centroids per action with their
/// accumulated weights W, plus a decayed selection count n per action.
class CentroidBank {
public:
    CentroidBank(std::size_t num_actions, std::size_t latent_dim, const CentroidBankParams& params, Rng& rng);

    std::size_t num_actions() const noexcept { return centroids_.size(); }
    std::size_t centroids_per_action() const noexcept { return params_.centroids_per_action; }
    std::size_t latent_dim() const noexcept { return latent_dim_; }
    const CentroidBankParams& params() const noexcept { return params_; }

    /// latent_dim x M, one centroid per column.
    const Matrix& centroids(std::size_t action) const { return centroids_.at(action); }
    const Vector& cumulative_weights(std::size_t action) const { return weights_.at(action); }
    double count(std::size_t action) const { return counts_.at(action); }

    /// Overwrites one action's state (used to seed tests and restore runs).
    void set_action_state(std::size_t action, Matrix centroids, Vector cumulative_weights, double count);

    friend void centroid_commit(CentroidBank& bank, std::size_t chosen, const Vector& z, const Vector& weights);

private:
    std::size_t latent_dim_;
    CentroidBankParams params_;
    std::vector<Matrix> centroids_;
    std::vector<Vector> weights_;
    std::vector<double> counts_;
};

/// Euclidean distance from z to each centroid of `action`.
Vector centroid_distances(const Vector& z, const CentroidBank& bank, std::size_t action);

/// w = 1 / (d + eps), element-wise.
Vector centroid_weights(const Vector& distances, double eps);

/// centroid_weights(centroid_distances(z, bank, i)) for every action i.
std::vector<Vector> all_centroid_weights(const Vector& z, const CentroidBank& bank);

/// n_bar_i = (n_i / M) * sum_m w_{i,m}; returns softmax over actions of n_bar.
Vector kmeans_rho(const CentroidBank& bank, const std::vector<Vector>& weights);

/// (W c + w z) / (W + w): moves c toward z in proportion to the new mass.
Vector convex_centroid_update(const Vector& c, double cumulative_weight, const Vector& z, double weight);

/// Moves the chosen action's centroids toward z, then decays every action's
/// W and n by gamma and credits the chosen action with w and one selection.
void centroid_commit(CentroidBank& bank, std::size_t chosen, const Vector& z, const Vector& weights);

}  // namespace rsb
