#include "rsbandit/env/shuttle.hpp"

#include "rsbandit/errors.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

namespace rsb {

BanditDataset load_shuttle(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IngestionError(path.string(), 0, "cannot open file");
    return parse_shuttle(in, path.string());
}

BanditDataset parse_shuttle(std::istream& in, const std::string& source) {
    std::vector<std::vector<double>> features;
    std::vector<std::size_t> labels;
    std::string line;
    std::size_t line_no = 0;
    std::size_t columns = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::istringstream tokens(line);
        std::vector<long long> values;
        std::string tok;
        while (tokens >> tok) {
            long long v = 0;
            const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
            if (res.ec != std::errc{} || res.ptr != tok.data() + tok.size()) {
                throw IngestionError(source, line_no, "non-integer token '" + tok + "'");
            }
            values.push_back(v);
        }
        if (values.empty()) continue;
        if (values.size() < 2) throw IngestionError(source, line_no, "need at least one feature and a label");
        if (columns == 0) columns = values.size();
        if (values.size() != columns) {
            throw IngestionError(source, line_no,
                                 "expected " + std::to_string(columns) + " fields, got " + std::to_string(values.size()));
        }
        const long long label = values.back();
        if (label < 1 || label > static_cast<long long>(kShuttleClasses)) {
            throw IngestionError(source, line_no, "class label " + std::to_string(label) + " outside 1..7");
        }
        labels.push_back(static_cast<std::size_t>(label - 1));
        features.emplace_back(values.begin(), values.end() - 1);
    }
    if (in.bad()) throw IngestionError(source, line_no, "read failure");
    if (labels.empty()) throw IngestionError(source, line_no, "no records");

    const auto d = static_cast<Eigen::Index>(columns - 1);
    const auto n = static_cast<Eigen::Index>(labels.size());
    BanditDataset ds;
    ds.name = "shuttle";
    ds.reward_kind = RewardKind::deterministic;
    ds.contexts.resize(d, n);
    for (Eigen::Index t = 0; t < n; ++t)
        for (Eigen::Index j = 0; j < d; ++j) ds.contexts(j, t) = features[static_cast<std::size_t>(t)][static_cast<std::size_t>(j)];
    for (Eigen::Index j = 0; j < d; ++j) {
        const double lo = ds.contexts.row(j).minCoeff();
        const double span = ds.contexts.row(j).maxCoeff() - lo;
        if (span > 0.0) {
            ds.contexts.row(j) = (ds.contexts.row(j).array() - lo) / span;
        } else {
            ds.contexts.row(j).setZero();
        }
    }
    ds.expected_rewards = Matrix::Zero(static_cast<Eigen::Index>(kShuttleClasses), n);
    for (Eigen::Index t = 0; t < n; ++t) ds.expected_rewards(static_cast<Eigen::Index>(labels[static_cast<std::size_t>(t)]), t) = 1.0;
    ds.metadata["source"] = source;
    ds.metadata["feature_count"] = std::to_string(d);
    ds.metadata["records"] = std::to_string(n);
    ds.validate();
    return ds;
}

}  // namespace rsb
