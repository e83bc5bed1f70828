#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

namespace smellscan {

/// The nine design smells, in report row order.
enum class SmellKind {
    UnutilizedAbstraction,
    InsufficientModularization,
    BrokenHierarchy,
    DeficientEncapsulation,
    CyclicDependentModularization,
    UnnecessaryAbstraction,
    MultifacetedAbstraction,
    WideHierarchy,
    MissingHierarchy,
};

inline constexpr std::size_t kSmellKindCount = 9;

inline constexpr std::array<SmellKind, kSmellKindCount> kAllSmellKinds = {
    SmellKind::UnutilizedAbstraction,      SmellKind::InsufficientModularization,
    SmellKind::BrokenHierarchy,            SmellKind::DeficientEncapsulation,
    SmellKind::CyclicDependentModularization, SmellKind::UnnecessaryAbstraction,
    SmellKind::MultifacetedAbstraction,    SmellKind::WideHierarchy,
    SmellKind::MissingHierarchy,
};

constexpr std::size_t index_of(SmellKind kind) { return static_cast<std::size_t>(kind); }

/// Machine slug used in provenance logs and ground-truth files.
constexpr std::string_view slug(SmellKind kind)
{
    switch (kind) {
    case SmellKind::UnutilizedAbstraction: return "unutilized_abstraction";
    case SmellKind::InsufficientModularization: return "insufficient_modularization";
    case SmellKind::BrokenHierarchy: return "broken_hierarchy";
    case SmellKind::DeficientEncapsulation: return "deficient_encapsulation";
    case SmellKind::CyclicDependentModularization: return "cyclic_dependent_modularization";
    case SmellKind::UnnecessaryAbstraction: return "unnecessary_abstraction";
    case SmellKind::MultifacetedAbstraction: return "multifaceted_abstraction";
    case SmellKind::WideHierarchy: return "wide_hierarchy";
    case SmellKind::MissingHierarchy: return "missing_hierarchy";
    }
    return "";
}

/// Prefix of the smell's keys in the rule config file.
constexpr std::string_view config_prefix(SmellKind kind)
{
    switch (kind) {
    case SmellKind::CyclicDependentModularization: return "cyclic";
    case SmellKind::MultifacetedAbstraction: return "multifaceted";
    default: return slug(kind);
    }
}

constexpr std::string_view display_name(SmellKind kind)
{
    switch (kind) {
    case SmellKind::UnutilizedAbstraction: return "Unutilized Abstraction";
    case SmellKind::InsufficientModularization: return "Insufficient Modularization";
    case SmellKind::BrokenHierarchy: return "Broken Hierarchy";
    case SmellKind::DeficientEncapsulation: return "Deficient Encapsulation";
    case SmellKind::CyclicDependentModularization: return "Cyclic-Dependent Modularization";
    case SmellKind::UnnecessaryAbstraction: return "Unnecessary Abstraction";
    case SmellKind::MultifacetedAbstraction: return "Multifaceted Abstraction";
    case SmellKind::WideHierarchy: return "Wide Hierarchy";
    case SmellKind::MissingHierarchy: return "Missing Hierarchy";
    }
    return "";
}

/// Accepts either the slug or the display name.
inline std::optional<SmellKind> parse_smell_kind(std::string_view text)
{
    for (SmellKind kind : kAllSmellKinds) {
        if (text == slug(kind) || text == display_name(kind)) {
            return kind;
        }
    }
    return std::nullopt;
}

} // namespace smellscan
