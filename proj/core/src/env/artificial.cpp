#include "rsbandit/env/artificial.hpp"

#include "rsbandit/errors.hpp"
#include "rsbandit/format.hpp"

#include <algorithm>
#include <random>

namespace rsb {
namespace {

constexpr double kCenter = 0.5;

Matrix unit_columns(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    Matrix m(rows, cols);
    for (Eigen::Index j = 0; j < cols; ++j) {
        for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = gauss(rng);
        m.col(j).normalize();
    }
    return m;
}

double mean_top(const Matrix& scores, double scale) {
    const Matrix p = (kCenter + scale * scores.array()).cwiseMax(0.0).cwiseMin(1.0).matrix();
    return p.colwise().maxCoeff().mean();
}

}  // namespace

BanditDataset generate_artificial(const ArtificialConfig& cfg) {
    if (cfg.dim < 1 || cfg.num_actions < 2 || cfg.num_points < 1 ||
        !(cfg.target_top_mean > kCenter && cfg.target_top_mean < 1.0) || !(cfg.context_noise_std >= 0.0)) {
        throw InvalidArgument("generate_artificial: invalid configuration");
    }
    Rng rng(cfg.seed);
    const auto d = static_cast<Eigen::Index>(cfg.dim);
    const auto k = static_cast<Eigen::Index>(cfg.num_actions);
    const std::size_t pool_n = cfg.pool_size == 0 ? cfg.num_points : cfg.pool_size;

    const Matrix theta = unit_columns(d, k, rng);  // one column per action
    const Matrix pool = unit_columns(d, static_cast<Eigen::Index>(pool_n), rng);
    const Matrix pool_scores = theta.transpose() * pool;

    // mean_top is non-decreasing in scale; bisect for the target.
    double lo = 0.0;
    double hi = 1.0;
    while (mean_top(pool_scores, hi) < cfg.target_top_mean) {
        hi *= 2.0;
        if (hi > 1e6) throw InvalidArgument("generate_artificial: target_top_mean unreachable");
    }
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        (mean_top(pool_scores, mid) < cfg.target_top_mean ? lo : hi) = mid;
    }
    const double scale = 0.5 * (lo + hi);

    BanditDataset ds;
    ds.name = "artificial";
    ds.reward_kind = RewardKind::bernoulli;
    ds.contexts.resize(d, static_cast<Eigen::Index>(cfg.num_points));
    std::normal_distribution<double> noise(0.0, cfg.context_noise_std);
    for (std::size_t t = 0; t < cfg.num_points; ++t) {
        const auto base = static_cast<Eigen::Index>(t % pool_n);
        auto col = ds.contexts.col(static_cast<Eigen::Index>(t));
        col = pool.col(base);
        if (cfg.context_noise_std > 0.0)
            for (Eigen::Index j = 0; j < d; ++j) col(j) += noise(rng);
    }
    ds.expected_rewards =
        (kCenter + scale * (theta.transpose() * ds.contexts).array()).cwiseMax(0.0).cwiseMin(1.0).matrix();
    ds.metadata["generator_scale"] = format_double(scale);
    ds.metadata["pool_size"] = std::to_string(pool_n);
    ds.metadata["mean_top_expected"] = format_double(ds.expected_rewards.colwise().maxCoeff().mean());
    ds.validate();
    return ds;
}

}  // namespace rsb
