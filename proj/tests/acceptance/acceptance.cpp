// End-to-end acceptance checks. Prints one PASS/FAIL line per criterion and
// exits non-zero if any criterion fails.
//
// Usage: rsbandit_acceptance [criterion numbers...]
// The shuttle file is taken from $RSBANDIT_SHUTTLE_PATH, falling back to
// data/shuttle.trn under the source tree.

#include "rsbandit/env/artificial.hpp"
#include "rsbandit/env/dataset.hpp"
#include "rsbandit/env/shuttle.hpp"
#include "rsbandit/format.hpp"
#include "rsbandit/harness/config.hpp"
#include "rsbandit/harness/factory.hpp"
#include "rsbandit/harness/results.hpp"
#include "rsbandit/harness/simulation.hpp"
#include "rsbandit/linear/episodic_memory.hpp"
#include "rsbandit/linear/policies.hpp"
#include "rsbandit/numeric/gradient_check.hpp"
#include "rsbandit/reliability/centroid_bank.hpp"
#include "rsbandit/reliability/estimators.hpp"

#include <Eigen/QR>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>

using namespace rsb;
namespace fs = std::filesystem;

namespace {

struct Verdict {
    bool pass = false;
    std::string detail;
};

class Stopwatch {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

std::string fmt(double v, int precision = 4) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    return buf;
}

fs::path shuttle_path() {
    if (const char* env = std::getenv("RSBANDIT_SHUTTLE_PATH"); env && *env) return env;
    return fs::path(RSBANDIT_SOURCE_DIR) / "data" / "shuttle.trn";
}

// ---------------------------------------------------------------- 1

Verdict gradient_correctness() {
    Stopwatch clock;
    Rng rng(1001);
    const std::size_t widths[] = {8, 16, 128};
    const std::size_t dims[] = {8, 64};
    const std::size_t actions[] = {2, 4, 7};
    std::normal_distribution<double> g;
    std::uniform_real_distribution<double> u;
    double worst = 0.0;
    std::size_t checked = 0;
    for (int cfg = 0; cfg < 100; ++cfg) {
        const std::size_t w = widths[cfg % 3];
        const std::size_t d = dims[(cfg / 3) % 2];
        const std::size_t k = actions[(cfg / 6) % 3];
        const MlpParams params = MlpParams::he_normal({d, w, 2, k}, rng);
        std::vector<Sample> samples;
        for (int i = 0; i < 16; ++i) {
            Vector x(static_cast<Eigen::Index>(d));
            for (auto& v : x) v = g(rng);
            samples.push_back({x, static_cast<std::size_t>(i) % k, u(rng)});
        }
        const Batch batch = Batch::from_samples(samples);
        LayerGradients grad;
        mlp_loss_and_gradient(params, batch, grad);
        GradientCheckOptions opts;
        opts.seed = static_cast<std::uint64_t>(cfg);
        const auto report = gradient_check_report(params, batch, grad, opts);
        worst = std::max(worst, report.max_relative_error);
        checked += report.checked;
    }
    const double t = clock.seconds();
    return {worst < 1e-4 && t < 60.0, "max relative error " + fmt(worst) + " over 100 nets (" +
                                          std::to_string(checked) + " weights), " + fmt(t, 3) + " s"};
}

// ---------------------------------------------------------------- 2

Vector batch_ridge(const std::vector<Sample>& records, std::size_t count, std::size_t action, std::size_t dim,
                   double ridge) {
    std::vector<const Sample*> rows;
    for (std::size_t i = 0; i < count; ++i)
        if (records[i].action == action) rows.push_back(&records[i]);
    Matrix x(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(dim));
    Vector y(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        x.row(static_cast<Eigen::Index>(i)) = rows[i]->x.transpose();
        y(static_cast<Eigen::Index>(i)) = rows[i]->reward;
    }
    const Matrix a = ridge * Matrix::Identity(dim, dim) + x.transpose() * x;
    return a.colPivHouseholderQr().solve(x.transpose() * y);
}

Verdict regression_oracle() {
    double worst = 0.0;
    std::size_t interactions = 0;
    const PolicyKind kinds[] = {PolicyKind::lingreedy, PolicyKind::linucb, PolicyKind::lints, PolicyKind::reglinrs};
    for (std::size_t k : {2u, 3u, 4u}) {
        ArtificialConfig ac;
        ac.dim = 6;
        ac.num_actions = k;
        ac.num_points = 400;
        ac.seed = k;
        const BanditDataset ds = generate_artificial(ac);
        for (PolicyKind kind : kinds) {
            const PolicySpec spec = make_policy_spec(kind, ReliabilityKind::knn, Hyperparameters{});
            const double ridge = kind == PolicyKind::lints ? spec.hp.lints_lambda : 1.0;
            for (std::size_t steps = 1; steps <= 200; steps += 7) {
                auto policy = make_policy(spec, k, ds.dim(), steps);
                auto* linear = dynamic_cast<LinearPolicyBase*>(policy.get());
                Rng rng(steps * 31 + k);
                std::vector<Sample> records;
                const std::size_t warmup = spec.hp.warmup_pulls * k;
                std::size_t solved = 0;
                for (std::size_t t = 0; t < steps; ++t) {
                    const Vector x = ds.context(t);
                    const std::size_t a = t < warmup ? t % k : policy->select(x);
                    const double r = env_step(ds, t, a, rng).observed_reward;
                    policy->update(x, a, r);
                    records.push_back({x, a, r});
                    if ((t + 1) % spec.hp.linear_batch == 0) solved = t + 1;
                    if (t + 1 == warmup) {
                        policy->end_warmup();
                        solved = t + 1;
                    }
                }
                for (std::size_t a = 0; a < k; ++a) {
                    const Vector oracle = batch_ridge(records, solved, a, ds.dim(), ridge);
                    worst = std::max(worst, (linear->stats().theta(a) - oracle).cwiseAbs().maxCoeff());
                }
                ++interactions;
            }
        }
    }
    return {worst <= 1e-9, "max |theta - batch solution| " + fmt(worst) + " over " + std::to_string(interactions) +
                               " interactions of 1..200 steps"};
}

// ---------------------------------------------------------------- 3

Verdict reliability_normalization() {
    Rng rng(303);
    std::normal_distribution<double> g(0.0, 4.0);
    std::uniform_int_distribution<std::size_t> kdist(2, 8);
    std::uniform_int_distribution<std::size_t> small(0, 40);
    double worst_sum = 0.0;
    double worst_min = 0.0;
    auto record = [&](const Vector& rho) {
        worst_sum = std::max(worst_sum, std::abs(rho.sum() - 1.0));
        worst_min = std::min(worst_min, rho.minCoeff());
    };
    const int per_kind = 2500;
    for (int i = 0; i < per_kind; ++i) {
        const std::size_t k = kdist(rng);
        Vector f(static_cast<Eigen::Index>(k));
        for (auto& v : f) v = g(rng) * (i % 5 == 0 ? 100.0 : 1.0);
        record(xe_reliability(f));

        std::vector<std::size_t> counts(k);
        for (auto& c : counts) c = small(rng);
        counts[i % k] += 1;
        record(trial_ratio_reliability(counts));

        const std::size_t dim = 1 + i % 6;
        EpisodicMemory mem(64, k, dim);
        const std::size_t fill = 1 + small(rng);
        for (std::size_t j = 0; j < fill; ++j) {
            Vector x(static_cast<Eigen::Index>(dim));
            for (auto& v : x) v = i % 7 == 0 ? 1.0 : g(rng);
            mem.append(x, small(rng) % k);
        }
        Vector q(static_cast<Eigen::Index>(dim));
        for (auto& v : q) v = g(rng);
        record(knn_reliability(q, mem, 1 + small(rng) % mem.size(), 1e-4));

        CentroidBank bank(k, dim, {2 * k, 0.99, 1.0, 1e-8}, rng);
        const std::size_t commits = small(rng);
        for (std::size_t j = 0; j < commits; ++j) {
            Vector z(static_cast<Eigen::Index>(dim));
            for (auto& v : z) v = std::abs(g(rng));
            const std::size_t a = small(rng) % k;
            centroid_commit(bank, a, z, all_centroid_weights(z, bank)[a]);
        }
        Vector z(static_cast<Eigen::Index>(dim));
        for (auto& v : z) v = std::abs(g(rng));
        record(kmeans_rho(bank, all_centroid_weights(z, bank)));
    }
    return {worst_sum <= 1e-9 && worst_min >= 0.0,
            "4 x " + std::to_string(per_kind) + " inputs, max |sum - 1| " + fmt(worst_sum) + ", min entry " +
                fmt(worst_min)};
}

// ---------------------------------------------------------------- 4

Verdict centroid_convexity() {
    Rng rng(404);
    std::normal_distribution<double> g(0.0, 10.0);
    std::exponential_distribution<double> e(0.1);
    std::size_t violations = 0;
    const int tuples = 10000;
    for (int i = 0; i < tuples; ++i) {
        const auto dim = static_cast<Eigen::Index>(1 + i % 16);
        Vector c(dim), z(dim);
        for (auto& v : c) v = g(rng);
        for (auto& v : z) v = g(rng);
        const double big_w = i % 20 == 0 ? 0.0 : e(rng);
        const double w = 1.0 / (std::abs(g(rng)) + 1e-8);
        const Vector out = convex_centroid_update(c, big_w, z, w);
        for (Eigen::Index j = 0; j < dim; ++j) {
            if (out(j) < std::min(c(j), z(j)) || out(j) > std::max(c(j), z(j))) ++violations;
        }
    }
    return {violations == 0, std::to_string(violations) + " component violations over " + std::to_string(tuples) +
                                 " tuples"};
}

// ---------------------------------------------------------------- 5

Verdict rs_finite_regret() {
    Stopwatch clock;
    const BanditDataset ds = make_stationary({0.7, 0.5});
    PolicySpec spec = make_policy_spec(PolicyKind::rs, ReliabilityKind::trial_ratio, Hyperparameters{});
    spec.hp.aleph = 0.6;
    double at_5k = 0.0;
    double at_10k = 0.0;
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const RunResult r = run_simulation(spec, ds, 10000, seed);
        at_5k += r.trace.cumulative_regret()[4999] / 20.0;
        at_10k += r.trace.cumulative_regret()[9999] / 20.0;
    }
    const double growth = (at_10k - at_5k) / at_5k;
    const double t = clock.seconds();
    return {growth < 0.05 && t < 10.0, "regret " + fmt(at_5k) + " -> " + fmt(at_10k) + " (growth " +
                                           fmt(100 * growth, 3) + "%), " + fmt(t, 3) + " s"};
}

// ---------------------------------------------------------------- 6-8

ExperimentConfig desk_config(EnvKind env) {
    ExperimentConfig cfg;
    cfg.env = env;
    cfg.steps = 10000;
    cfg.runs = 10;
    cfg.seed = 0;
    cfg.shuttle_path = shuttle_path().string();
    return cfg;
}

// Final-regret means per label, cached so criteria 6 and 8 share runs.
class Suite {
public:
    explicit Suite(EnvKind env) : cfg_(desk_config(env)) {}

    const BanditDataset& dataset() {
        if (!ds_) ds_ = make_environment(cfg_);
        return *ds_;
    }

    const AggregatedResult& result(PolicyKind kind, ReliabilityKind rel = ReliabilityKind::knn) {
        const PolicySpec spec = make_policy_spec(kind, rel, cfg_.defaults);
        auto it = cache_.find(spec.label);
        if (it == cache_.end()) {
            ExperimentConfig one = cfg_;
            one.policies = {spec};
            Stopwatch clock;
            auto res = run_batch(one, dataset());
            seconds_ += clock.seconds();
            it = cache_.emplace(spec.label, std::move(res.front())).first;
        }
        return it->second;
    }

    double seconds() const { return seconds_; }

private:
    ExperimentConfig cfg_;
    std::optional<BanditDataset> ds_;
    std::map<std::string, AggregatedResult> cache_;
    double seconds_ = 0.0;
};

std::string regret_list(const std::vector<std::pair<std::string, double>>& items) {
    std::string out;
    for (const auto& [label, v] : items) out += (out.empty() ? "" : ", ") + label + " " + fmt(v, 5);
    return out;
}

Verdict artificial_ordering(Suite& suite) {
    const double rs = suite.result(PolicyKind::neuralrs).final_regret_mean;
    std::vector<std::pair<std::string, double>> items{{"neuralrs-knn", rs}};
    bool pass = true;
    for (PolicyKind kind : {PolicyKind::neuralucb, PolicyKind::neuralts, PolicyKind::linucb, PolicyKind::lints,
                            PolicyKind::lingreedy, PolicyKind::reglinrs}) {
        const double v = suite.result(kind).final_regret_mean;
        items.emplace_back(to_string(kind), v);
        pass = pass && rs < v;
    }
    const double t = suite.seconds();
    pass = pass && t < 1800.0;
    return {pass, "final regret " + regret_list(items) + "; " + fmt(t, 4) + " s"};
}

Verdict shuttle_ordering(Suite& suite) {
    if (!fs::exists(shuttle_path())) return {false, "data file not found: " + shuttle_path().string()};
    const auto& nrs = suite.result(PolicyKind::neuralrs);
    const double lin = suite.result(PolicyKind::reglinrs).final_regret_mean;
    const double reduction = 1.0 - nrs.final_regret_mean / lin;
    const bool pass = reduction >= 0.30 && nrs.trailing_accuracy_mean > 0.95;
    return {pass, "neuralrs-knn " + fmt(nrs.final_regret_mean, 5) + " vs reglinrs " + fmt(lin, 5) + " (" +
                      fmt(100 * reduction, 3) + "% lower), neuralrs trailing-1000 accuracy " +
                      fmt(nrs.trailing_accuracy_mean)};
}

std::pair<bool, std::string> reliability_order_on(Suite& suite) {
    std::vector<std::pair<std::string, double>> items;
    for (ReliabilityKind rel :
         {ReliabilityKind::knn, ReliabilityKind::kmeans, ReliabilityKind::xe, ReliabilityKind::trial_ratio}) {
        items.emplace_back(to_string(rel), suite.result(PolicyKind::neuralrs, rel).final_regret_mean);
    }
    bool knn_lowest = true;
    bool xe_highest = true;
    for (const auto& [label, v] : items) {
        if (label != "knn") knn_lowest = knn_lowest && items[0].second < v;
        if (label != "xe") xe_highest = xe_highest && items[2].second > v;
    }
    return {knn_lowest && xe_highest, regret_list(items)};
}

Verdict reliability_ordering(Suite& artificial, Suite& shuttle) {
    const auto [art_ok, art_text] = reliability_order_on(artificial);
    std::string detail = "artificial: " + art_text + (art_ok ? " (ordered)" : " (not ordered)");
    if (!fs::exists(shuttle_path())) {
        return {false, detail + "; shuttle: data file not found: " + shuttle_path().string()};
    }
    const auto [sh_ok, sh_text] = reliability_order_on(shuttle);
    detail += "; shuttle: " + sh_text + (sh_ok ? " (ordered)" : " (not ordered)");
    return {art_ok && sh_ok, detail};
}

// ---------------------------------------------------------------- 9

std::string read_file(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

Verdict determinism() {
    ExperimentConfig cfg;
    cfg.steps = 1000;
    cfg.runs = 3;
    cfg.seed = 7;
    cfg.artificial.num_points = 1000;
    cfg.artificial.seed = 7;
    for (PolicyKind kind : {PolicyKind::neuralrs, PolicyKind::reglinrs, PolicyKind::lints, PolicyKind::neuralts}) {
        PolicySpec spec = make_policy_spec(kind, ReliabilityKind::kmeans, cfg.defaults);
        spec.hp.hidden_width = 32;
        cfg.policies.push_back(spec);
    }
    const BanditDataset ds = make_environment(cfg);
    const fs::path base = fs::temp_directory_path() / "rsbandit_acceptance_determinism";
    fs::remove_all(base);
    const auto first = write_results(run_batch(cfg, ds), cfg, ds, base / "a");
    const auto second = write_results(run_batch(cfg, ds), cfg, ds, base / "b");
    std::size_t identical = 0;
    std::size_t files = first.per_policy_csv.size() + 1;
    for (std::size_t i = 0; i < first.per_policy_csv.size(); ++i)
        identical += read_file(first.per_policy_csv[i]) == read_file(second.per_policy_csv[i]);
    identical += read_file(first.long_csv) == read_file(second.long_csv);
    fs::remove_all(base);
    return {identical == files, std::to_string(identical) + "/" + std::to_string(files) + " CSV files byte-identical"};
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> wanted;
    for (int i = 1; i < argc; ++i) wanted.insert(std::atoi(argv[i]));
    auto enabled = [&](int id) { return wanted.empty() || wanted.count(id) > 0; };

    Suite artificial(EnvKind::artificial);
    Suite shuttle(EnvKind::shuttle);

    const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
        {"gradient correctness", gradient_correctness},
        {"regression oracle", regression_oracle},
        {"reliability normalization", reliability_normalization},
        {"centroid convexity", centroid_convexity},
        {"RS finite-regret property", rs_finite_regret},
        {"artificial-dataset ordering", [&] { return artificial_ordering(artificial); }},
        {"shuttle ordering", [&] { return shuttle_ordering(shuttle); }},
        {"reliability-candidate ordering", [&] { return reliability_ordering(artificial, shuttle); }},
        {"determinism", determinism},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int id = static_cast<int>(i + 1);
        if (!enabled(id)) continue;
        Verdict v;
        try {
            v = criteria[i].second();
        } catch (const std::exception& e) {
            v = {false, std::string("error: ") + e.what()};
        }
        failures += !v.pass;
        std::printf("%s %d %s: %s\n", v.pass ? "PASS" : "FAIL", id, criteria[i].first.c_str(), v.detail.c_str());
        std::fflush(stdout);
    }
    return failures == 0 ? 0 : 1;
}
