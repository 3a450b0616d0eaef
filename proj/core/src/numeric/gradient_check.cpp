#include "rsbandit/numeric/gradient_check.hpp"

#include "rsbandit/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <vector>

namespace rsb {
namespace {

// Forward pass that also records the sign pattern of every hidden
// pre-activation. Deliberately separate from the training code path.
double probe_loss(const MlpParams& params, const Batch& batch, std::vector<bool>& pattern) {
    pattern.clear();
    Matrix h = batch.inputs;
    for (std::size_t l = 0; l + 1 < params.depth(); ++l) {
        Matrix pre = params.layer(l) * h;
        for (Eigen::Index j = 0; j < pre.cols(); ++j)
            for (Eigen::Index i = 0; i < pre.rows(); ++i) pattern.push_back(pre(i, j) > 0.0);
        h = pre.cwiseMax(0.0);
    }
    const Matrix out = params.output_scale() * (params.layer(params.depth() - 1) * h);
    double loss = 0.0;
    for (std::size_t b = 0; b < batch.size(); ++b) {
        const double r = out(static_cast<Eigen::Index>(batch.actions[b]), static_cast<Eigen::Index>(b)) -
                         batch.rewards(static_cast<Eigen::Index>(b));
        loss += 0.5 * r * r;
    }
    return loss;
}

}  // namespace

GradientCheckReport gradient_check_report(const MlpParams& params, const Batch& batch,
                                          const LayerGradients& analytic,
                                          const GradientCheckOptions& options) {
    if (analytic.size() != params.depth()) throw InvalidArgument("gradient_check: gradient shape mismatch");
    if (batch.size() == 0) throw InvalidArgument("gradient_check: empty batch");

    // (layer, flat index) for every weight
    std::vector<std::pair<std::size_t, Eigen::Index>> all;
    all.reserve(params.parameter_count());
    for (std::size_t l = 0; l < params.depth(); ++l)
        for (Eigen::Index i = 0; i < params.layer(l).size(); ++i) all.emplace_back(l, i);

    std::vector<std::size_t> order(all.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::size_t budget = all.size();
    if (all.size() > options.exhaustive_limit) {
        Rng rng(options.seed);
        std::shuffle(order.begin(), order.end(), rng);
        budget = std::min(options.sample_size, all.size());
    }

    std::vector<bool> base_pattern;
    std::vector<bool> pattern;
    probe_loss(params, batch, base_pattern);

    MlpParams probe = params;
    GradientCheckReport report;
    for (std::size_t idx : order) {
        if (report.checked >= budget) break;
        const auto [layer, flat] = all[idx];
        double& w = probe.layer(layer).data()[flat];
        const double original = w;

        w = original + options.step;
        const double up = probe_loss(probe, batch, pattern);
        const bool kink_up = pattern != base_pattern;
        w = original - options.step;
        const double down = probe_loss(probe, batch, pattern);
        const bool kink_down = pattern != base_pattern;
        w = original;

        if (kink_up || kink_down) {
            ++report.skipped_at_kink;
            continue;
        }
        const double numeric = (up - down) / (2.0 * options.step);
        const double exact = analytic[layer].data()[flat];
        const double denom = std::max({std::abs(numeric), std::abs(exact), options.denominator_floor});
        report.max_relative_error = std::max(report.max_relative_error, std::abs(numeric - exact) / denom);
        ++report.checked;
    }
    return report;
}

double gradient_check(const MlpParams& params, const Batch& batch, const GradientCheckOptions& options) {
    LayerGradients grad = zeros_like(params);
    mlp_loss_and_gradient(params, batch, grad);
    return gradient_check_report(params, batch, grad, options).max_relative_error;
}

}  // namespace rsb
