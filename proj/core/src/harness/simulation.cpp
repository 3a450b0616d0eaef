#include "rsbandit/harness/simulation.hpp"

#include "rsbandit/env/artificial.hpp"
#include "rsbandit/env/shuttle.hpp"
#include "rsbandit/errors.hpp"
#include "rsbandit/harness/factory.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <mutex>
#include <random>
#include <thread>

namespace rsb {
namespace {

std::uint64_t derive_seed(std::uint64_t seed, std::uint32_t stream) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32), stream};
    std::uint32_t out[2];
    seq.generate(out, out + 2);
    return (static_cast<std::uint64_t>(out[0]) << 32) | out[1];
}

constexpr std::uint32_t kEnvStream = 0x656e76;
constexpr std::uint32_t kPolicyStream = 0x706f6c;
constexpr std::size_t kTrailingWindow = 1000;

}  // namespace

RunResult run_simulation(const PolicySpec& spec, const BanditDataset& ds, std::size_t steps, std::uint64_t seed,
                         bool count_warmup_regret) {
    RunResult result;
    result.seed = seed;
    Rng env_rng(derive_seed(seed, kEnvStream));
    const std::vector<std::size_t> order = episode_order(ds.size(), steps, env_rng);

    std::size_t row = 0;
    auto peek = [&ds, &row] { return ds.expected(row); };
    auto policy = make_policy(spec, ds.num_actions(), ds.dim(), derive_seed(seed, kPolicyStream), peek);

    const std::size_t k = ds.num_actions();
    const std::size_t warmup = policy->requires_warmup() ? std::min(steps, spec.hp.warmup_pulls * k) : 0;
    result.trace.reserve(steps);
    try {
        for (std::size_t t = 0; t < steps; ++t) {
            row = order[t];
            const FeatureVector x = ds.context(row);
            const bool forced = t < warmup;
            const std::size_t action = forced ? t % k : policy->select(x);
            StepOutcome outcome = env_step(ds, row, action, env_rng);
            outcome.step = t;
            policy->update(x, action, outcome.observed_reward);
            if (!forced || count_warmup_regret) result.trace.append(outcome);
            if (forced && t + 1 == warmup) policy->end_warmup();
        }
    } catch (const TrainingDivergence& e) {
        result.failed = true;
        result.failure = e.what();
    }
    return result;
}

AggregatedResult aggregate(const std::string& label, const std::vector<RunResult>& runs, bool keep_runs) {
    AggregatedResult agg;
    agg.label = label;
    std::vector<const RunResult*> ok;
    for (const auto& r : runs) {
        if (r.failed) {
            ++agg.runs_failed;
            agg.failures.push_back("run " + std::to_string(r.run_index) + ": " + r.failure);
        } else {
            ok.push_back(&r);
        }
    }
    agg.runs_ok = ok.size();
    if (keep_runs) agg.runs = runs;
    if (ok.empty()) return agg;

    const std::size_t len = ok.front()->trace.size();
    for (const auto* r : ok) {
        if (r->trace.size() != len) throw InvalidArgument("aggregate: traces differ in length");
    }
    const double n = static_cast<double>(ok.size());
    agg.mean_regret.assign(len, 0.0);
    agg.stderr_regret.assign(len, 0.0);
    agg.mean_reward.assign(len, 0.0);
    agg.mean_accuracy.assign(len, 0.0);
    for (std::size_t t = 0; t < len; ++t) {
        double sum = 0.0;
        double reward = 0.0;
        double acc = 0.0;
        for (const auto* r : ok) {
            sum += r->trace.cumulative_regret()[t];
            reward += r->trace.cumulative_reward()[t];
            acc += r->trace.correct_rate()[t];
        }
        const double mean = sum / n;
        double var = 0.0;
        if (ok.size() > 1) {
            for (const auto* r : ok) {
                const double dlt = r->trace.cumulative_regret()[t] - mean;
                var += dlt * dlt;
            }
            var /= (n - 1.0);
        }
        agg.mean_regret[t] = mean;
        agg.stderr_regret[t] = std::sqrt(var / n);
        agg.mean_reward[t] = reward / n;
        agg.mean_accuracy[t] = acc / n;
    }
    if (len > 0) {
        agg.final_regret_mean = agg.mean_regret.back();
        agg.final_regret_stderr = agg.stderr_regret.back();
        agg.final_accuracy_mean = agg.mean_accuracy.back();
    }
    double trailing = 0.0;
    for (const auto* r : ok) trailing += r->trace.trailing_accuracy(kTrailingWindow);
    agg.trailing_accuracy_mean = trailing / n;
    return agg;
}

std::vector<AggregatedResult> run_batch(const ExperimentConfig& cfg, const BanditDataset& ds,
                                        const BatchOptions& options) {
    cfg.validate();
    ds.validate();
    const std::size_t jobs = cfg.policies.size() * cfg.runs;
    std::vector<RunResult> results(jobs);
    std::atomic<std::size_t> next{0};
    std::mutex progress_mutex;

    auto worker = [&] {
        for (std::size_t job = next++; job < jobs; job = next++) {
            const std::size_t p = job / cfg.runs;
            const std::size_t run = job % cfg.runs;
            RunResult r = run_simulation(cfg.policies[p], ds, cfg.steps, cfg.seed + run, cfg.count_warmup_regret);
            r.run_index = run;
            results[job] = std::move(r);
            if (options.progress) {
                std::lock_guard lock(progress_mutex);
                options.progress(cfg.policies[p].label, run);
            }
        }
    };

    std::size_t threads = cfg.threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : cfg.threads;
    threads = std::min(threads, jobs);
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (std::size_t i = 0; i < threads; ++i) pool.emplace_back(worker);
    }

    std::vector<AggregatedResult> out;
    out.reserve(cfg.policies.size());
    for (std::size_t p = 0; p < cfg.policies.size(); ++p) {
        std::vector<RunResult> runs(std::make_move_iterator(results.begin() + static_cast<std::ptrdiff_t>(p * cfg.runs)),
                                    std::make_move_iterator(results.begin() + static_cast<std::ptrdiff_t>((p + 1) * cfg.runs)));
        AggregatedResult agg = aggregate(cfg.policies[p].label, runs, options.keep_runs);
        for (const auto& f : agg.failures) std::clog << "[" << agg.label << "] failed " << f << '\n';
        if (agg.runs_ok == 0) throw AllRunsFailed("every run of '" + agg.label + "' failed");
        out.push_back(std::move(agg));
    }
    return out;
}

BanditDataset make_environment(const ExperimentConfig& cfg) {
    if (cfg.env == EnvKind::artificial) return generate_artificial(cfg.artificial);
    return load_shuttle(cfg.shuttle_path);
}

}  // namespace rsb
