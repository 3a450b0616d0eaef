#pragma once

#include "rsbandit/env/dataset.hpp"

#include <filesystem>
#include <istream>
#include <string>

namespace rsb {

inline constexpr std::size_t kShuttleClasses = 7;

/// Reads a Statlog-Shuttle style file: whitespace-separated integers, last
/// field the class label in 1..7. Features are min-max scaled per column to
/// [0, 1]; reward is 1 for the true class and 0 otherwise.
/// Throws IngestionError carrying the offending line number.
BanditDataset load_shuttle(const std::filesystem::path& path);
BanditDataset parse_shuttle(std::istream& in, const std::string& source = "<stream>");

}  // namespace rsb
