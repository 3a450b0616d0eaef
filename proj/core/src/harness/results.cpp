#include "rsbandit/harness/results.hpp"

#include "rsbandit/errors.hpp"
#include "rsbandit/format.hpp"
#include "rsbandit/harness/svg.hpp"

#include <json.hpp>
#include <openssl/evp.h>

#include <cstdio>
#include <fstream>
#include <sstream>

namespace rsb {

NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(Hyperparameters, aleph, centroid_multiplier, gamma, neural_nu, neural_lambda,
                                   memory_capacity, knn_k, linucb_alpha, lints_lambda, lints_alpha, lints_beta,
                                   hidden_width, depth, learning_rate, neural_batch, linear_batch, warmup_pulls,
                                   knn_eps, kmeans_eps, centroid_init_std)
NLOHMANN_DEFINE_TYPE_NON_INTRUSIVE(ArtificialConfig, dim, num_actions, target_top_mean, num_points,
                                   context_noise_std, pool_size, seed)

namespace {

using nlohmann::json;

json policy_to_json(const PolicySpec& p) {
    return json{{"label", p.label},
                {"kind", to_string(p.kind)},
                {"reliability", to_string(p.reliability)},
                {"hyperparameters", p.hp}};
}

PolicySpec policy_from_json(const json& j) {
    PolicySpec p;
    p.label = j.at("label").get<std::string>();
    const auto kind = parse_policy_kind(j.at("kind").get<std::string>());
    const auto rel = parse_reliability(j.at("reliability").get<std::string>());
    if (!kind || !rel) throw ConfigError("metadata: unknown policy kind or reliability");
    p.kind = *kind;
    p.reliability = *rel;
    p.hp = j.at("hyperparameters").get<Hyperparameters>();
    return p;
}

json config_json(const ExperimentConfig& cfg) {
    json policies = json::array();
    for (const auto& p : cfg.policies) policies.push_back(policy_to_json(p));
    return json{{"env", to_string(cfg.env)},
                {"steps", cfg.steps},
                {"runs", cfg.runs},
                {"seed", cfg.seed},
                {"defaults", cfg.defaults},
                {"artificial", cfg.artificial},
                {"shuttle_path", cfg.shuttle_path},
                {"output_dir", cfg.output_dir},
                {"count_warmup_regret", cfg.count_warmup_regret},
                {"threads", cfg.threads},
                {"policies", policies}};
}

ExperimentConfig config_from(const json& j) {
    ExperimentConfig cfg;
    const auto env = parse_env_kind(j.at("env").get<std::string>());
    if (!env) throw ConfigError("metadata: unknown env");
    cfg.env = *env;
    cfg.steps = j.at("steps").get<std::size_t>();
    cfg.runs = j.at("runs").get<std::size_t>();
    cfg.seed = j.at("seed").get<std::uint64_t>();
    cfg.defaults = j.at("defaults").get<Hyperparameters>();
    cfg.artificial = j.at("artificial").get<ArtificialConfig>();
    cfg.shuttle_path = j.at("shuttle_path").get<std::string>();
    cfg.output_dir = j.at("output_dir").get<std::string>();
    cfg.count_warmup_regret = j.at("count_warmup_regret").get<bool>();
    cfg.threads = j.at("threads").get<std::size_t>();
    for (const auto& p : j.at("policies")) cfg.policies.push_back(policy_from_json(p));
    return cfg;
}

std::ofstream open_out(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    return out;
}

void close_checked(std::ofstream& out, const std::filesystem::path& path) {
    out.close();
    if (!out) throw std::runtime_error("I/O failure while writing " + path.string());
}

}  // namespace

std::string config_to_json(const ExperimentConfig& cfg) { return config_json(cfg).dump(2); }

ExperimentConfig config_from_json(const std::string& text) {
    try {
        return config_from(json::parse(text));
    } catch (const json::exception& e) {
        throw ConfigError(std::string("malformed config JSON: ") + e.what());
    }
}

std::string git_blob_hash(const std::string& content) {
    const std::string header = "blob " + std::to_string(content.size()) + '\0';
    unsigned char digest[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_MD_CTX* ctx = EVP_MD_CTX_new();
    EVP_DigestInit_ex(ctx, EVP_sha1(), nullptr);
    EVP_DigestUpdate(ctx, header.data(), header.size());
    EVP_DigestUpdate(ctx, content.data(), content.size());
    EVP_DigestFinal_ex(ctx, digest, &len);
    EVP_MD_CTX_free(ctx);
    std::string hex;
    char buf[3];
    for (unsigned int i = 0; i < len; ++i) {
        std::snprintf(buf, sizeof(buf), "%02x", digest[i]);
        hex += buf;
    }
    return hex;
}

std::map<std::string, std::string> design_flags(const ExperimentConfig& cfg) {
    return {
        {"warmup_counted_in_regret", cfg.count_warmup_regret ? "true" : "false"},
        {"warmup", "round-robin, warmup_pulls per action, inside the step budget"},
        {"linear_batch_reading", "statistics accumulated every step; closed-form solve every linear_batch updates and at warmup end"},
        {"linear_regression", "separate ridge statistics per action"},
        {"knn_neighbours", "min(k, memory size) while memory fills"},
        {"kmeans_decay", "global: every action's W and n decay by gamma each step"},
        {"kmeans_softmax_domain", "over actions"},
        {"kmeans_weight_normalisation", "none (raw 1/(d+eps) weights)"},
        {"neural_ucb_ts_confidence", "diagonal approximation of Z"},
        {"neural_training", "incremental, one Adam step per environment step"},
        {"replay_sampling", "uniform without replacement over full history"},
        {"network_init", "He normal std sqrt(2/fan_in), no biases"},
        {"argmax_ties", "lowest action index"},
        {"shuttle_rows", "shuffled per run, extra steps drawn with replacement"},
    };
}

std::string sanitize_label(const std::string& label) {
    std::string out;
    for (char c : label) {
        const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '-' ||
                        c == '_' || c == '.';
        out += ok ? c : '_';
    }
    return out.empty() ? std::string("policy") : out;
}

WrittenFiles write_results(const std::vector<AggregatedResult>& results, const ExperimentConfig& cfg,
                           const BanditDataset& ds, const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());

    WrittenFiles files;
    for (const auto& r : results) {
        const auto path = dir / (sanitize_label(r.label) + ".csv");
        auto out = open_out(path);
        out << "step,mean_regret,stderr_regret,mean_reward,mean_accuracy\n";
        for (std::size_t t = 0; t < r.mean_regret.size(); ++t) {
            out << t + 1 << ',' << format_double(r.mean_regret[t]) << ',' << format_double(r.stderr_regret[t]) << ','
                << format_double(r.mean_reward[t]) << ',' << format_double(r.mean_accuracy[t]) << '\n';
        }
        close_checked(out, path);
        files.per_policy_csv.push_back(path);
    }

    files.long_csv = dir / "results_long.csv";
    {
        auto out = open_out(files.long_csv);
        out << "policy,step,metric,value\n";
        for (const auto& r : results) {
            const std::pair<const char*, const std::vector<double>*> metrics[] = {
                {"mean_regret", &r.mean_regret},
                {"stderr_regret", &r.stderr_regret},
                {"mean_reward", &r.mean_reward},
                {"mean_accuracy", &r.mean_accuracy},
            };
            for (const auto& [name, values] : metrics)
                for (std::size_t t = 0; t < values->size(); ++t)
                    out << r.label << ',' << t + 1 << ',' << name << ',' << format_double((*values)[t]) << '\n';
        }
        close_checked(out, files.long_csv);
    }

    files.metadata = dir / "metadata.json";
    {
        const std::string cfg_text = config_to_json(cfg);
        json meta;
        meta["config"] = config_json(cfg);
        meta["config_hash"] = git_blob_hash(cfg_text);
        meta["design_decisions"] = design_flags(cfg);
        json dataset{{"name", ds.name},
                     {"rows", ds.size()},
                     {"dim", ds.dim()},
                     {"num_actions", ds.num_actions()},
                     {"reward_kind", to_string(ds.reward_kind)}};
        for (const auto& [k, v] : ds.metadata) dataset["metadata"][k] = v;
        meta["dataset"] = dataset;
        json summary = json::object();
        for (const auto& r : results) {
            summary[r.label] = json{{"final_regret_mean", r.final_regret_mean},
                                    {"final_regret_stderr", r.final_regret_stderr},
                                    {"final_accuracy_mean", r.final_accuracy_mean},
                                    {"trailing_accuracy_mean", r.trailing_accuracy_mean},
                                    {"runs_ok", r.runs_ok},
                                    {"runs_failed", r.runs_failed},
                                    {"failures", r.failures}};
        }
        meta["summary"] = summary;
        auto out = open_out(files.metadata);
        out << meta.dump(2) << '\n';
        close_checked(out, files.metadata);
    }

    files.svg = dir / "regret.svg";
    {
        std::vector<Series> series;
        for (const auto& r : results) series.push_back({r.label, r.mean_regret});
        auto out = open_out(files.svg);
        write_line_chart_svg(out, series, "Mean cumulative regret (" + ds.name + ")", "regret");
        close_checked(out, files.svg);
    }
    return files;
}

ExperimentConfig read_metadata_config(const std::filesystem::path& metadata) {
    std::ifstream in(metadata);
    if (!in) throw ConfigError("cannot open " + metadata.string());
    try {
        return config_from(json::parse(in).at("config"));
    } catch (const json::exception& e) {
        throw ConfigError(metadata.string() + ": " + e.what());
    }
}

}  // namespace rsb
