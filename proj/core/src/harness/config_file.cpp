#include "rsbandit/harness/config_file.hpp"

#include "rsbandit/errors.hpp"

#include <charconv>
#include <fstream>
#include <optional>

namespace rsb {
namespace {

std::string trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    const auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T parse_number(const std::string& text, const std::string& where) {
    T v{};
    const auto res = std::from_chars(text.data(), text.data() + text.size(), v);
    if (res.ec != std::errc{} || res.ptr != text.data() + text.size()) {
        throw ConfigError(where + ": invalid number '" + text + "'");
    }
    return v;
}

bool parse_bool(const std::string& text, const std::string& where) {
    if (text == "true" || text == "1" || text == "yes") return true;
    if (text == "false" || text == "0" || text == "no") return false;
    throw ConfigError(where + ": expected true/false, got '" + text + "'");
}

struct PendingPolicy {
    std::string label;
    std::optional<PolicyKind> kind;
    ReliabilityKind reliability = ReliabilityKind::knn;
    std::vector<std::pair<std::string, std::string>> overrides;
    std::string where;
};

}  // namespace

ExperimentConfig parse_compare_config(std::istream& in, const std::string& source) {
    ExperimentConfig cfg;
    std::optional<std::uint64_t> artificial_seed;
    bool full = false;
    bool runs_given = false;
    std::vector<PendingPolicy> pending;

    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string where = source + ":" + std::to_string(line_no);
        std::string line = raw;
        if (const auto hash = line.find_first_of("#;"); hash != std::string::npos) line.resize(hash);
        line = trim(line);
        if (line.empty()) continue;

        if (line.front() == '[') {
            if (line.back() != ']') throw ConfigError(where + ": unterminated section header");
            const std::string name = trim(std::string_view(line).substr(1, line.size() - 2));
            constexpr std::string_view prefix = "policy.";
            if (name.rfind(prefix, 0) != 0 || name.size() == prefix.size()) {
                throw ConfigError(where + ": sections must be [policy.NAME], got [" + name + "]");
            }
            PendingPolicy p;
            p.label = name.substr(prefix.size());
            p.kind = parse_policy_kind(p.label);
            p.where = where;
            pending.push_back(std::move(p));
            continue;
        }

        const auto eq = line.find('=');
        if (eq == std::string::npos) throw ConfigError(where + ": expected 'key = value'");
        const std::string key = trim(std::string_view(line).substr(0, eq));
        const std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key.empty()) throw ConfigError(where + ": empty key");

        if (!pending.empty()) {
            PendingPolicy& p = pending.back();
            if (key == "type") {
                p.kind = parse_policy_kind(value);
                if (!p.kind) throw ConfigError(where + ": unknown policy type '" + value + "'");
            } else if (key == "reliability") {
                const auto rel = parse_reliability(value);
                if (!rel) throw ConfigError(where + ": unknown reliability '" + value + "'");
                p.reliability = *rel;
            } else {
                Hyperparameters probe;
                try {
                    probe.set(key, value);
                } catch (const ConfigError& e) {
                    throw ConfigError(where + ": " + e.what());
                }
                p.overrides.emplace_back(key, value);
            }
            continue;
        }

        if (key == "env") {
            const auto env = parse_env_kind(value);
            if (!env) throw ConfigError(where + ": unknown env '" + value + "'");
            cfg.env = *env;
        } else if (key == "steps") {
            cfg.steps = parse_number<std::size_t>(value, where);
        } else if (key == "runs") {
            cfg.runs = parse_number<std::size_t>(value, where);
            runs_given = true;
        } else if (key == "seed") {
            cfg.seed = parse_number<std::uint64_t>(value, where);
        } else if (key == "threads") {
            cfg.threads = parse_number<std::size_t>(value, where);
        } else if (key == "shuttle_path") {
            cfg.shuttle_path = value;
        } else if (key == "out") {
            cfg.output_dir = value;
        } else if (key == "count_warmup_regret") {
            cfg.count_warmup_regret = parse_bool(value, where);
        } else if (key == "full") {
            full = parse_bool(value, where);
        } else if (key == "artificial.dim") {
            cfg.artificial.dim = parse_number<std::size_t>(value, where);
        } else if (key == "artificial.num_actions") {
            cfg.artificial.num_actions = parse_number<std::size_t>(value, where);
        } else if (key == "artificial.num_points") {
            cfg.artificial.num_points = parse_number<std::size_t>(value, where);
        } else if (key == "artificial.pool_size") {
            cfg.artificial.pool_size = parse_number<std::size_t>(value, where);
        } else if (key == "artificial.target_top_mean") {
            cfg.artificial.target_top_mean = parse_number<double>(value, where);
        } else if (key == "artificial.noise_std") {
            cfg.artificial.context_noise_std = parse_number<double>(value, where);
        } else if (key == "artificial.seed") {
            artificial_seed = parse_number<std::uint64_t>(value, where);
        } else {
            try {
                cfg.defaults.set(key, value);
            } catch (const ConfigError& e) {
                throw ConfigError(where + ": " + e.what());
            }
        }
    }

    if (full && !runs_given) cfg.runs = 100;
    cfg.artificial.seed = artificial_seed.value_or(cfg.seed);
    for (const auto& p : pending) {
        if (!p.kind) throw ConfigError(p.where + ": section needs 'type' (NAME is not a policy kind)");
        PolicySpec spec;
        spec.label = p.label;
        spec.kind = *p.kind;
        spec.reliability = p.reliability;
        spec.hp = cfg.defaults;
        for (const auto& [k, v] : p.overrides) spec.hp.set(k, v);
        cfg.policies.push_back(std::move(spec));
    }
    cfg.validate();
    return cfg;
}

ExperimentConfig load_compare_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot open config file " + path.string());
    return parse_compare_config(in, path.string());
}

}  // namespace rsb
