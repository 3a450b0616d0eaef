#pragma once

#include "rsbandit/env/dataset.hpp"
#include "rsbandit/harness/config.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace rsb {

struct RunResult {
    std::size_t run_index = 0;
    std::uint64_t seed = 0;
    RegretTrace trace;
    bool failed = false;
    std::string failure;
};

/// One seeded run: forced round-robin warmup (warmup_pulls per action, part of
/// the step budget) followed by the policy's own select/update loop.
/// A TrainingDivergence marks the run failed instead of propagating.
RunResult run_simulation(const PolicySpec& spec, const BanditDataset& ds, std::size_t steps, std::uint64_t seed,
                         bool count_warmup_regret = true);

struct AggregatedResult {
    std::string label;
    std::vector<double> mean_regret;
    std::vector<double> stderr_regret;
    std::vector<double> mean_reward;    // mean cumulative reward
    std::vector<double> mean_accuracy;  // mean running correct rate
    std::size_t runs_ok = 0;
    std::size_t runs_failed = 0;
    std::vector<std::string> failures;
    double final_regret_mean = 0.0;
    double final_regret_stderr = 0.0;
    double final_accuracy_mean = 0.0;
    double trailing_accuracy_mean = 0.0;  // last 1,000 steps
    std::vector<RunResult> runs;          // kept when requested
};

/// Averages successful runs step by step. Failed runs are counted and skipped.
AggregatedResult aggregate(const std::string& label, const std::vector<RunResult>& runs, bool keep_runs = false);

class AllRunsFailed : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

using ProgressFn = std::function<void(const std::string& label, std::size_t run_index)>;

struct BatchOptions {
    bool keep_runs = false;
    ProgressFn progress;
};

/// Runs cfg.runs simulations per policy with seeds seed + run_index, possibly
/// on several threads, and merges them in run-index order.
/// Throws AllRunsFailed if every run of some policy failed.
std::vector<AggregatedResult> run_batch(const ExperimentConfig& cfg, const BanditDataset& ds,
                                        const BatchOptions& options = {});

/// Builds the configured environment (generates or loads the dataset).
BanditDataset make_environment(const ExperimentConfig& cfg);

}  // namespace rsb
