#pragma once

#include "rsbandit/numeric/linalg.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace rsb {

enum class ReliabilityKind { knn, kmeans, xe, trial_ratio };

std::string to_string(ReliabilityKind kind);
/// Accepts knn | kmeans | xe | trial | trial_ratio.
std::optional<ReliabilityKind> parse_reliability(std::string_view text);

/// Softmax of the network outputs, read as selection probabilities.
Vector xe_reliability(const Vector& outputs);

/// n_i / sum(n). Throws InvalidArgument when no action has been tried.
Vector trial_ratio_reliability(const std::vector<std::size_t>& counts);

}  // namespace rsb
