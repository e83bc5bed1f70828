#include <smellscan/rules/rule_cards.hpp>

#include <smellscan/error.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fnmatch.h>
#include <fstream>
#include <sstream>

namespace smellscan::rules {

namespace {

using Type = ParamSpec::Type;
using K = SmellKind;

constexpr double kNoLimit = 1e9;

std::string format_number(double v)
{
    char buf[32];
    if (v == std::floor(v) && std::fabs(v) < 1e15) {
        std::snprintf(buf, sizeof buf, "%.0f", v);
    } else {
        std::snprintf(buf, sizeof buf, "%.6g", v);
    }
    return buf;
}

std::string join(const std::vector<std::string>& items, std::string_view sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += sep;
        out += items[i];
    }
    return out;
}

std::string_view trim(std::string_view s)
{
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

std::vector<std::string> split_patterns(std::string_view text)
{
    std::vector<std::string> out;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t comma = text.find(',', start);
        std::string_view item = trim(text.substr(start, comma == std::string_view::npos
                                                            ? std::string_view::npos
                                                            : comma - start));
        if (!item.empty()) out.emplace_back(item);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

std::string_view predicate_name(SmellKind kind)
{
    switch (kind) {
    case K::UnutilizedAbstraction: return "no-incoming-dependency";
    case K::InsufficientModularization: return "size-or-complexity-exceeded";
    case K::BrokenHierarchy: return "degenerate-override";
    case K::DeficientEncapsulation: return "public-mutable-field";
    case K::CyclicDependentModularization: return "dependency-cycle-member";
    case K::UnnecessaryAbstraction: return "hollow-single-child-abstraction";
    case K::MultifacetedAbstraction: return "low-cohesion";
    case K::WideHierarchy: return "many-direct-children";
    case K::MissingHierarchy: return "same-subject-branch-chain";
    }
    return "";
}

} // namespace

const std::vector<ParamSpec>& parameter_specs()
{
    static const std::vector<ParamSpec> specs = {
        {K::UnutilizedAbstraction, "exclude", Type::Patterns, 0, 0, std::string()},
        {K::UnutilizedAbstraction, "exempt_entry_points", Type::Flag, 0, 0, true},
        {K::InsufficientModularization, "max_loc", Type::Integer, 1, kNoLimit, 500.0},
        {K::InsufficientModularization, "max_methods", Type::Integer, 1, kNoLimit, 30.0},
        {K::InsufficientModularization, "max_total_cc", Type::Integer, 1, kNoLimit, 100.0},
        {K::InsufficientModularization, "flag_multiple_toplevel_types", Type::Flag, 0, 0, true},
        {K::BrokenHierarchy, "min_degenerate_overrides", Type::Integer, 1, kNoLimit, 1.0},
        {K::BrokenHierarchy, "include_empty_bodies", Type::Flag, 0, 0, true},
        {K::DeficientEncapsulation, "min_nonconstant_public_fields", Type::Integer, 1, kNoLimit, 1.0},
        {K::CyclicDependentModularization, "min_cycle_size", Type::Integer, 2, kNoLimit, 2.0},
        {K::MultifacetedAbstraction, "min_lcom", Type::Real, 0, 1, 0.8},
        {K::MultifacetedAbstraction, "min_methods", Type::Integer, 2, kNoLimit, 7.0},
        {K::MultifacetedAbstraction, "min_fields", Type::Integer, 1, kNoLimit, 2.0},
        {K::MultifacetedAbstraction, "lcom_variant", Type::Text, 0, 0, std::string("henderson-sellers")},
        {K::WideHierarchy, "min_children", Type::Integer, 1, kNoLimit, 10.0},
        {K::MissingHierarchy, "min_chain", Type::Integer, 2, kNoLimit, 4.0},
    };
    return specs;
}

bool is_threshold(const ParamSpec& spec)
{
    return spec.name.starts_with("min_") || spec.name.starts_with("max_");
}

double RuleCard::number(std::string_view name) const
{
    return std::get<double>(params.find(name)->second);
}

bool RuleCard::flag(std::string_view name) const
{
    return std::get<bool>(params.find(name)->second);
}

const std::string& RuleCard::text(std::string_view name) const
{
    return std::get<std::string>(params.find(name)->second);
}

const RuleCard& RuleConfig::card(SmellKind kind) const
{
    return cards.at(index_of(kind));
}

RuleCard& RuleConfig::card(SmellKind kind)
{
    return cards.at(index_of(kind));
}

RuleConfig default_rule_config()
{
    RuleConfig config;
    for (SmellKind kind : kAllSmellKinds) {
        config.cards.push_back(RuleCard{kind, {}, std::string(predicate_name(kind))});
    }
    for (const ParamSpec& spec : parameter_specs()) {
        if (spec.type != Type::Patterns) {
            config.card(spec.kind).params.emplace(std::string(spec.name), spec.default_value);
        }
    }
    return config;
}

RuleConfig parse_rule_config(std::string_view text)
{
    RuleConfig config = default_rule_config();
    int line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view raw = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                             : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;

        auto fail = [&](const std::string& why) {
            throw ConfigError("rule config line " + std::to_string(line_no) + ": " + why);
        };
        std::string_view line = trim(raw);
        if (line.empty() || line.front() == '#') continue;

        const std::size_t eq = line.find('=');
        if (eq == std::string_view::npos) fail("expected 'smell.parameter = value'");
        std::string_view key = trim(line.substr(0, eq));
        std::string_view value = trim(line.substr(eq + 1));
        const std::size_t dot = key.find('.');
        if (dot == std::string_view::npos) fail("expected 'smell.parameter = value'");
        std::string_view prefix = key.substr(0, dot);
        std::string_view name = key.substr(dot + 1);

        const ParamSpec* spec = nullptr;
        for (const ParamSpec& s : parameter_specs()) {
            if (config_prefix(s.kind) == prefix && s.name == name) spec = &s;
        }
        if (!spec) fail("unknown key '" + std::string(key) + "'");

        switch (spec->type) {
        case Type::Integer:
        case Type::Real: {
            double v = 0;
            auto [end, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
            if (ec != std::errc() || end != value.data() + value.size() || value.empty()) {
                fail("value of '" + std::string(key) + "' is not a number");
            }
            if (spec->type == Type::Integer && v != std::floor(v)) {
                fail("value of '" + std::string(key) + "' must be an integer");
            }
            if (v < spec->min || v > spec->max) {
                fail("value of '" + std::string(key) + "' out of range [" + format_number(spec->min) +
                     ", " + format_number(spec->max) + "]");
            }
            config.card(spec->kind).params[std::string(name)] = v;
            break;
        }
        case Type::Flag:
            if (value == "true") {
                config.card(spec->kind).params[std::string(name)] = true;
            } else if (value == "false") {
                config.card(spec->kind).params[std::string(name)] = false;
            } else {
                fail("value of '" + std::string(key) + "' must be true or false");
            }
            break;
        case Type::Text:
            if (value != std::get<std::string>(spec->default_value)) {
                fail("unsupported value '" + std::string(value) + "' for '" + std::string(key) + "'");
            }
            break;
        case Type::Patterns:
            for (std::string& p : split_patterns(value)) config.exclude_patterns.push_back(std::move(p));
            break;
        }
    }
    return config;
}

RuleConfig load_rule_config(const std::optional<std::filesystem::path>& path)
{
    if (!path) {
        return default_rule_config();
    }
    std::ifstream in(*path, std::ios::binary);
    if (!in) {
        throw ConfigError("cannot read rule config " + path->string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_rule_config(text.str());
}

std::string serialize(const RuleConfig& config)
{
    std::string out;
    for (const ParamSpec& spec : parameter_specs()) {
        std::string key = std::string(config_prefix(spec.kind)) + "." + std::string(spec.name);
        if (spec.type == Type::Patterns) {
            out += key + " = " + join(config.exclude_patterns) + "\n";
            continue;
        }
        const ParamValue& v = config.card(spec.kind).params.find(spec.name)->second;
        out += key + " = ";
        if (const double* d = std::get_if<double>(&v)) {
            out += format_number(*d);
        } else if (const bool* b = std::get_if<bool>(&v)) {
            out += *b ? "true" : "false";
        } else {
            out += std::get<std::string>(v);
        }
        out += "\n";
    }
    return out;
}

bool matches_pattern(std::string_view pattern, std::string_view name)
{
    return fnmatch(std::string(pattern).c_str(), std::string(name).c_str(), 0) == 0;
}

namespace {

std::string count(double v) { return format_number(v); }
std::string boolean(bool b) { return b ? "true" : "false"; }

RuleResult unutilized(const RuleCard& card, const metrics::MetricsRecord& r,
                      const model::SourceModel& model, const std::vector<std::string>& exclude)
{
    const model::TypeEntity* t = model::lookup_type(model, r.qualified_name);
    const bool entry = t && t->entry_point;
    const bool exempt = entry && card.flag("exempt_entry_points");
    const bool excluded = std::any_of(exclude.begin(), exclude.end(), [&](const std::string& p) {
        return matches_pattern(p, r.qualified_name);
    });
    return {r.fan_in == 0 && !exempt && !excluded,
            {{"fan_in", count(r.fan_in)}, {"entry_point", boolean(entry)}, {"excluded", boolean(excluded)}}};
}

RuleResult insufficient(const RuleCard& card, const metrics::MetricsRecord& r)
{
    const double max_loc = card.number("max_loc");
    const double max_methods = card.number("max_methods");
    const double max_cc = card.number("max_total_cc");
    const bool multi = card.flag("flag_multiple_toplevel_types") && r.toplevel_types_in_file > 1;
    const bool hit = r.loc > max_loc || r.nom > max_methods || r.total_cc > max_cc || multi;
    return {hit,
            {{"loc", count(r.loc)},
             {"max_loc", count(max_loc)},
             {"methods", count(r.nom)},
             {"max_methods", count(max_methods)},
             {"total_cc", count(r.total_cc)},
             {"max_total_cc", count(max_cc)},
             {"toplevel_types_in_file", count(r.toplevel_types_in_file)}}};
}

RuleResult broken(const RuleCard& card, const metrics::MetricsRecord& r)
{
    const bool include_empty = card.flag("include_empty_bodies");
    std::vector<std::string> degenerate;
    for (const metrics::OverrideRecord& o : r.overrides) {
        if (o.body == metrics::BodyClass::ThrowOnly ||
            (include_empty && o.body == metrics::BodyClass::Empty)) {
            degenerate.push_back(o.signature + ":" + std::string(metrics::to_string(o.body)));
        }
    }
    const double min = card.number("min_degenerate_overrides");
    return {static_cast<double>(degenerate.size()) >= min,
            {{"degenerate_overrides", count(static_cast<double>(degenerate.size()))},
             {"min_degenerate_overrides", count(min)},
             {"methods", join(degenerate)}}};
}

RuleResult deficient(const RuleCard& card, const metrics::MetricsRecord& r)
{
    const double min = card.number("min_nonconstant_public_fields");
    return {r.nonconstant_public_fields >= min,
            {{"nonconstant_public_fields", count(r.nonconstant_public_fields)},
             {"min_nonconstant_public_fields", count(min)},
             {"fields", join(r.nonconstant_public_field_names)}}};
}

RuleResult cyclic(const RuleCard& card, const metrics::MetricsRecord& r, const model::SourceModel& model)
{
    const double min = card.number("min_cycle_size");
    auto id = model.find(r.qualified_name);
    if (!id || !model.resolved()) {
        return {false, {{"cycle_size", "1"}, {"min_cycle_size", count(min)}}};
    }
    std::vector<std::string> members;
    for (std::size_t m : model.graph().component_members(*id)) {
        members.push_back(model.type(m).qualified_name);
    }
    std::sort(members.begin(), members.end());
    return {static_cast<double>(members.size()) >= min,
            {{"cycle_size", count(static_cast<double>(members.size()))},
             {"min_cycle_size", count(min)},
             {"members", join(members)}}};
}

RuleResult unnecessary(const metrics::MetricsRecord& r, const model::SourceModel& model)
{
    const model::TypeEntity* t = model::lookup_type(model, r.qualified_name);
    if (!t) return {false, {{"subtypes", count(r.noc)}}};
    int concrete = 0;
    for (model::ElementId m : t->methods) {
        if (!model.description(m).abstract) ++concrete;
    }
    for (model::ElementId c : t->constructors) {
        if (metrics::classify_body(*model.description(c).method) != metrics::BodyClass::Empty) ++concrete;
    }
    const bool abstraction = t->is_abstract() && !t->annotation_type;
    return {abstraction && r.noc == 1 && r.nof == 0 && concrete == 0,
            {{"abstract", boolean(abstraction)},
             {"subtypes", count(r.noc)},
             {"fields", count(r.nof)},
             {"concrete_members", count(concrete)}}};
}

RuleResult multifaceted(const RuleCard& card, const metrics::MetricsRecord& r,
                        const model::SourceModel& model)
{
    // Interfaces hold no state; their constants say nothing about cohesion.
    const model::TypeEntity* t = model::lookup_type(model, r.qualified_name);
    const bool stateful = t && t->kind != ast::TypeKind::Interface;
    const double min_lcom = card.number("min_lcom");
    const double min_methods = card.number("min_methods");
    const double min_fields = card.number("min_fields");
    char lcom_text[32];
    std::snprintf(lcom_text, sizeof lcom_text, "%.4f", r.lcom);
    return {stateful && r.lcom + 1e-9 >= min_lcom && r.nom >= min_methods && r.nof >= min_fields,
            {{"lcom", lcom_text},
             {"min_lcom", format_number(min_lcom)},
             {"methods", count(r.nom)},
             {"min_methods", count(min_methods)},
             {"fields", count(r.nof)},
             {"min_fields", count(min_fields)}}};
}

RuleResult wide(const RuleCard& card, const metrics::MetricsRecord& r)
{
    const double min = card.number("min_children");
    return {r.noc >= min, {{"children", count(r.noc)}, {"min_children", count(min)}}};
}

RuleResult missing(const RuleCard& card, const metrics::MetricsRecord& r)
{
    const double min = card.number("min_chain");
    const metrics::ChainRecord* best = nullptr;
    for (const metrics::ChainRecord& c : r.chains) {
        if (!best || c.length > best->length) best = &c;
    }
    if (!best) {
        return {false, {{"chain_length", "0"}, {"min_chain", count(min)}}};
    }
    return {best->length >= min,
            {{"chain_length", count(best->length)},
             {"min_chain", count(min)},
             {"method", best->signature},
             {"subject_kind", std::string(metrics::to_string(best->subject))},
             {"subject", best->subject_text}}};
}

} // namespace

RuleResult evaluate_rule(const RuleCard& card, const metrics::MetricsRecord& record,
                         const model::SourceModel& model, const std::vector<std::string>& exclude_patterns)
{
    switch (card.kind) {
    case K::UnutilizedAbstraction: return unutilized(card, record, model, exclude_patterns);
    case K::InsufficientModularization: return insufficient(card, record);
    case K::BrokenHierarchy: return broken(card, record);
    case K::DeficientEncapsulation: return deficient(card, record);
    case K::CyclicDependentModularization: return cyclic(card, record, model);
    case K::UnnecessaryAbstraction: return unnecessary(record, model);
    case K::MultifacetedAbstraction: return multifaceted(card, record, model);
    case K::WideHierarchy: return wide(card, record);
    case K::MissingHierarchy: return missing(card, record);
    }
    return {};
}

} // namespace smellscan::rules
