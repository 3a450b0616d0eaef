#include "rsbandit/harness/config.hpp"

#include "rsbandit/errors.hpp"

#include <charconv>
#include <functional>
#include <map>

namespace rsb {
namespace {

constexpr std::pair<PolicyKind, std::string_view> kPolicyNames[] = {
    {PolicyKind::neuralrs, "neuralrs"},   {PolicyKind::reglinrs, "reglinrs"},   {PolicyKind::rs, "rs"},
    {PolicyKind::lingreedy, "lingreedy"}, {PolicyKind::linucb, "linucb"},       {PolicyKind::lints, "lints"},
    {PolicyKind::neuralucb, "neuralucb"}, {PolicyKind::neuralts, "neuralts"},   {PolicyKind::oracle, "oracle"},
    {PolicyKind::random, "random"},
};

double to_double(std::string_view key, std::string_view text) {
    double v = 0.0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ConfigError("'" + std::string(key) + "': expected a number, got '" + std::string(text) + "'");
    }
    return v;
}

std::size_t to_count(std::string_view key, std::string_view text) {
    std::size_t v = 0;
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ConfigError("'" + std::string(key) + "': expected a non-negative integer, got '" + std::string(text) + "'");
    }
    return v;
}

using Setter = std::function<void(Hyperparameters&, std::string_view, std::string_view)>;

template <typename T>
Setter field(T Hyperparameters::*member) {
    return [member](Hyperparameters& hp, std::string_view key, std::string_view value) {
        if constexpr (std::is_same_v<T, double>) {
            hp.*member = to_double(key, value);
        } else {
            hp.*member = to_count(key, value);
        }
    };
}

const std::map<std::string, Setter, std::less<>>& setters() {
    static const std::map<std::string, Setter, std::less<>> table = {
        {"aleph", field(&Hyperparameters::aleph)},
        {"centroid_multiplier", field(&Hyperparameters::centroid_multiplier)},
        {"gamma", field(&Hyperparameters::gamma)},
        {"neural_nu", field(&Hyperparameters::neural_nu)},
        {"neural_lambda", field(&Hyperparameters::neural_lambda)},
        {"memory_capacity", field(&Hyperparameters::memory_capacity)},
        {"knn_k", field(&Hyperparameters::knn_k)},
        {"linucb_alpha", field(&Hyperparameters::linucb_alpha)},
        {"lints_lambda", field(&Hyperparameters::lints_lambda)},
        {"lints_alpha", field(&Hyperparameters::lints_alpha)},
        {"lints_beta", field(&Hyperparameters::lints_beta)},
        {"hidden_width", field(&Hyperparameters::hidden_width)},
        {"depth", field(&Hyperparameters::depth)},
        {"learning_rate", field(&Hyperparameters::learning_rate)},
        {"neural_batch", field(&Hyperparameters::neural_batch)},
        {"linear_batch", field(&Hyperparameters::linear_batch)},
        {"warmup_pulls", field(&Hyperparameters::warmup_pulls)},
        {"knn_eps", field(&Hyperparameters::knn_eps)},
        {"kmeans_eps", field(&Hyperparameters::kmeans_eps)},
        {"centroid_init_std", field(&Hyperparameters::centroid_init_std)},
    };
    return table;
}

}  // namespace

std::string to_string(PolicyKind kind) {
    for (const auto& [k, name] : kPolicyNames)
        if (k == kind) return std::string(name);
    return "unknown";
}

std::string to_string(EnvKind kind) { return kind == EnvKind::artificial ? "artificial" : "shuttle"; }

std::optional<PolicyKind> parse_policy_kind(std::string_view text) {
    for (const auto& [k, name] : kPolicyNames)
        if (name == text) return k;
    return std::nullopt;
}

std::optional<EnvKind> parse_env_kind(std::string_view text) {
    if (text == "artificial") return EnvKind::artificial;
    if (text == "shuttle") return EnvKind::shuttle;
    return std::nullopt;
}

void Hyperparameters::set(std::string_view key, std::string_view value) {
    const auto it = setters().find(key);
    if (it == setters().end()) throw ConfigError("unknown hyperparameter '" + std::string(key) + "'");
    it->second(*this, key, value);
}

const std::vector<std::string>& Hyperparameters::keys() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> out;
        for (const auto& [k, _] : setters()) out.push_back(k);
        return out;
    }();
    return names;
}

void ExperimentConfig::validate() const {
    if (steps < 1) throw ConfigError("steps must be at least 1");
    if (runs < 1) throw ConfigError("runs must be at least 1");
    if (policies.empty()) throw ConfigError("no policies configured");
    for (const auto& p : policies) {
        const auto& hp = p.hp;
        if (p.label.empty()) throw ConfigError("policy with empty label");
        if (!(hp.gamma > 0.0 && hp.gamma <= 1.0)) throw ConfigError(p.label + ": gamma must be in (0, 1]");
        if (hp.hidden_width < 1 || hp.depth < 2) throw ConfigError(p.label + ": network needs width >= 1, depth >= 2");
        if (hp.knn_k < 1 || hp.memory_capacity < 1) throw ConfigError(p.label + ": knn_k and memory_capacity must be positive");
        if (hp.neural_batch < 1 || hp.linear_batch < 1) throw ConfigError(p.label + ": batch sizes must be positive");
        if (hp.centroid_multiplier < 1) throw ConfigError(p.label + ": centroid_multiplier must be positive");
        if (!(hp.learning_rate > 0.0) || !(hp.neural_lambda > 0.0) || !(hp.lints_lambda > 0.0)) {
            throw ConfigError(p.label + ": learning_rate and lambdas must be positive");
        }
        if (!(hp.lints_alpha > 0.0) || !(hp.lints_beta > 0.0)) throw ConfigError(p.label + ": LinTS priors must be positive");
        if (!(hp.knn_eps > 0.0) || !(hp.kmeans_eps > 0.0)) throw ConfigError(p.label + ": eps values must be positive");
    }
    for (std::size_t i = 0; i < policies.size(); ++i)
        for (std::size_t j = i + 1; j < policies.size(); ++j)
            if (policies[i].label == policies[j].label) throw ConfigError("duplicate policy label '" + policies[i].label + "'");
    if (env == EnvKind::artificial) {
        if (artificial.dim < 1 || artificial.num_actions < 2 || artificial.num_points < 1 ||
            !(artificial.target_top_mean > 0.0 && artificial.target_top_mean < 1.0)) {
            throw ConfigError("invalid artificial dataset settings");
        }
    }
}

PolicySpec make_policy_spec(PolicyKind kind, ReliabilityKind reliability, const Hyperparameters& hp) {
    PolicySpec spec;
    spec.kind = kind;
    spec.reliability = reliability;
    spec.hp = hp;
    spec.label = to_string(kind);
    if (kind == PolicyKind::neuralrs) spec.label += "-" + to_string(reliability);
    return spec;
}

}  // namespace rsb
