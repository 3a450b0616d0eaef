#include "rsbandit/reliability/estimators.hpp"

#include "rsbandit/errors.hpp"

namespace rsb {

std::string to_string(ReliabilityKind kind) {
    switch (kind) {
        case ReliabilityKind::knn: return "knn";
        case ReliabilityKind::kmeans: return "kmeans";
        case ReliabilityKind::xe: return "xe";
        case ReliabilityKind::trial_ratio: return "trial_ratio";
    }
    return "unknown";
}

std::optional<ReliabilityKind> parse_reliability(std::string_view text) {
    if (text == "knn") return ReliabilityKind::knn;
    if (text == "kmeans") return ReliabilityKind::kmeans;
    if (text == "xe") return ReliabilityKind::xe;
    if (text == "trial" || text == "trial_ratio") return ReliabilityKind::trial_ratio;
    return std::nullopt;
}

Vector xe_reliability(const Vector& outputs) { return softmax(outputs); }

Vector trial_ratio_reliability(const std::vector<std::size_t>& counts) {
    std::size_t total = 0;
    for (std::size_t n : counts) total += n;
    if (total == 0) throw InvalidArgument("trial_ratio_reliability: no trials recorded");
    Vector rho(static_cast<Eigen::Index>(counts.size()));
    for (std::size_t i = 0; i < counts.size(); ++i) {
        rho(static_cast<Eigen::Index>(i)) = static_cast<double>(counts[i]) / static_cast<double>(total);
    }
    return rho;
}

}  // namespace rsb
