// Command-line front end: `bandit run` for a single policy, `bandit compare`
// for a multi-policy suite described in a key = value file.

#include "rsbandit/errors.hpp"
#include "rsbandit/harness/config_file.hpp"
#include "rsbandit/harness/results.hpp"
#include "rsbandit/harness/simulation.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>

namespace {

enum ExitCode : int { kOk = 0, kConfigError = 1, kIngestionError = 2, kAllRunsFailed = 3 };

int execute(const rsb::ExperimentConfig& cfg) {
    const rsb::BanditDataset ds = rsb::make_environment(cfg);
    std::clog << "dataset " << ds.name << ": " << ds.size() << " rows, d=" << ds.dim() << ", K=" << ds.num_actions()
              << '\n';
    rsb::BatchOptions options;
    options.progress = [&cfg](const std::string& label, std::size_t run) {
        std::clog << "  " << label << " run " << run + 1 << "/" << cfg.runs << " done\n";
    };
    const auto results = rsb::run_batch(cfg, ds, options);
    const auto files = rsb::write_results(results, cfg, ds, cfg.output_dir);
    for (const auto& r : results) {
        std::printf("%-20s final regret %10.3f +- %7.3f  accuracy %.4f  (last 1000: %.4f)  runs %zu/%zu\n",
                    r.label.c_str(), r.final_regret_mean, r.final_regret_stderr, r.final_accuracy_mean,
                    r.trailing_accuracy_mean, r.runs_ok, r.runs_ok + r.runs_failed);
    }
    std::printf("wrote %s\n", files.metadata.parent_path().string().c_str());
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Satisficing contextual bandit experiments"};
    app.require_subcommand(1);

    rsb::ExperimentConfig cfg;
    std::string env = "artificial";
    std::string policy = "neuralrs";
    std::string reliability = "knn";
    double aleph = cfg.defaults.aleph;
    bool full = false;

    auto* run = app.add_subcommand("run", "Run one policy over several seeded simulations");
    run->add_option("--env", env, "artificial | shuttle")->check(CLI::IsMember({"artificial", "shuttle"}));
    run->add_option("--policy", policy, "Policy to simulate")
        ->check(CLI::IsMember({"neuralrs", "reglinrs", "rs", "lingreedy", "linucb", "lints", "neuralucb", "neuralts",
                               "oracle", "random"}));
    run->add_option("--reliability", reliability, "NeuralRS reliability estimator")
        ->check(CLI::IsMember({"knn", "kmeans", "xe", "trial", "trial_ratio"}));
    run->add_option("--steps", cfg.steps, "Steps per run")->check(CLI::PositiveNumber);
    auto* runs_opt = run->add_option("--runs", cfg.runs, "Independent runs")->check(CLI::PositiveNumber);
    run->add_option("--seed", cfg.seed, "Base seed; run i uses seed + i");
    run->add_option("--aleph", aleph, "Aspiration level");
    run->add_option("--shuttle-path", cfg.shuttle_path, "Statlog-Shuttle data file");
    run->add_option("--out", cfg.output_dir, "Output directory");
    run->add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    run->add_flag("--full", full, "Use the full 100-run protocol");
    run->add_flag("!--exclude-warmup", cfg.count_warmup_regret, "Do not record warmup steps in the regret trace");

    std::string config_path;
    auto* compare = app.add_subcommand("compare", "Run a multi-policy suite from a config file");
    compare->add_option("--config", config_path, "Suite file (key = value, [policy.NAME] sections)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kConfigError;
    }

    try {
        if (*run) {
            cfg.env = *rsb::parse_env_kind(env);
            cfg.defaults.aleph = aleph;
            if (full && runs_opt->count() == 0) cfg.runs = 100;
            cfg.artificial.seed = cfg.seed;
            cfg.policies.push_back(
                rsb::make_policy_spec(*rsb::parse_policy_kind(policy), *rsb::parse_reliability(reliability), cfg.defaults));
            cfg.validate();
            return execute(cfg);
        }
        return execute(rsb::load_compare_config(config_path));
    } catch (const rsb::ConfigError& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const rsb::InvalidArgument& e) {
        std::cerr << "config error: " << e.what() << '\n';
        return kConfigError;
    } catch (const rsb::IngestionError& e) {
        std::cerr << "ingestion error: " << e.what() << '\n';
        return kIngestionError;
    } catch (const rsb::AllRunsFailed& e) {
        std::cerr << "all runs failed: " << e.what() << '\n';
        return kAllRunsFailed;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kConfigError;
    }
}
