#pragma once

#include <smellscan/metrics/metrics.hpp>
#include <smellscan/model/model.hpp>
#include <smellscan/smell_kind.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace smellscan::rules {

/// Numbers, flags, or text (the exclusion pattern list, the LCOM variant).
using ParamValue = std::variant<double, bool, std::string>;

/// Ordered `key=value` pairs explaining a verdict.
using Evidence = std::vector<std::pair<std::string, std::string>>;

struct RuleCard {
    SmellKind kind = SmellKind::UnutilizedAbstraction;
    std::map<std::string, ParamValue, std::less<>> params;
    std::string predicate;  // name of the built-in predicate

    double number(std::string_view name) const;
    bool flag(std::string_view name) const;
    const std::string& text(std::string_view name) const;

    friend bool operator==(const RuleCard&, const RuleCard&) = default;
};

struct RuleConfig {
    std::vector<RuleCard> cards;  // one per smell, in report order
    std::vector<std::string> exclude_patterns;  // unutilized-abstraction whitelist

    const RuleCard& card(SmellKind kind) const;
    RuleCard& card(SmellKind kind);

    friend bool operator==(const RuleConfig&, const RuleConfig&) = default;
};

/// How a parameter is typed and bounded.
struct ParamSpec {
    SmellKind kind;
    std::string_view name;
    enum class Type { Integer, Real, Flag, Text, Patterns } type;
    double min = 0;
    double max = 0;
    ParamValue default_value;
};

const std::vector<ParamSpec>& parameter_specs();

/// Whether raising the parameter can only shrink the finding set (the
/// `min_*` parameters and the `max_*` limits).
bool is_threshold(const ParamSpec& spec);

RuleConfig default_rule_config();

/// Parses `smell.param = value` lines over the defaults. Throws ConfigError
/// naming the line for malformed lines, unknown keys, and bad values.
RuleConfig parse_rule_config(std::string_view text);

/// Defaults when `path` is empty; an unreadable file is a ConfigError.
RuleConfig load_rule_config(const std::optional<std::filesystem::path>& path);

/// Every parameter, one per line, in a form `parse_rule_config` accepts.
std::string serialize(const RuleConfig& config);

/// Shell-style `*` / `?` match of a qualified name.
bool matches_pattern(std::string_view pattern, std::string_view name);

struct RuleResult {
    bool suspected = false;
    Evidence evidence;
};

/// Applies the card's predicate to one type.
RuleResult evaluate_rule(const RuleCard& card, const metrics::MetricsRecord& record,
                         const model::SourceModel& model,
                         const std::vector<std::string>& exclude_patterns = {});

} // namespace smellscan::rules
