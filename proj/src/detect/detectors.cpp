#include <smellscan/detect/detectors.hpp>

#include <algorithm>
#include <tuple>

namespace smellscan::detect {

bool finding_less(const SmellFinding& a, const SmellFinding& b)
{
    return std::tie(a.kind, a.qualified_name) < std::tie(b.kind, b.qualified_name);
}

std::vector<SmellFinding> detect(SmellKind kind, const model::SourceModel& model,
                                 const metrics::MetricsMap& metrics, const rules::RuleConfig& config)
{
    const rules::RuleCard& card = config.card(kind);
    std::vector<SmellFinding> out;
    // The metrics map is keyed by qualified name, so results come out sorted.
    for (const auto& [name, record] : metrics) {
        rules::RuleResult result = rules::evaluate_rule(card, record, model, config.exclude_patterns);
        if (!result.suspected) continue;
        const model::TypeEntity* t = model::lookup_type(model, name);
        if (!t) continue;
        out.push_back(SmellFinding{kind, name, t->file, t->line, std::move(result.evidence)});
    }
    return out;
}

#define SMELLSCAN_DETECTOR(fn, kind)                                                                \
    std::vector<SmellFinding> fn(const model::SourceModel& model, const metrics::MetricsMap& metrics, \
                                 const rules::RuleConfig& config)                                   \
    {                                                                                               \
        return detect(SmellKind::kind, model, metrics, config);                                     \
    }

SMELLSCAN_DETECTOR(detect_unutilized_abstraction, UnutilizedAbstraction)
SMELLSCAN_DETECTOR(detect_insufficient_modularization, InsufficientModularization)
SMELLSCAN_DETECTOR(detect_broken_hierarchy, BrokenHierarchy)
SMELLSCAN_DETECTOR(detect_deficient_encapsulation, DeficientEncapsulation)
SMELLSCAN_DETECTOR(detect_cyclic_dependent_modularization, CyclicDependentModularization)
SMELLSCAN_DETECTOR(detect_unnecessary_abstraction, UnnecessaryAbstraction)
SMELLSCAN_DETECTOR(detect_multifaceted_abstraction, MultifacetedAbstraction)
SMELLSCAN_DETECTOR(detect_wide_hierarchy, WideHierarchy)
SMELLSCAN_DETECTOR(detect_missing_hierarchy, MissingHierarchy)

#undef SMELLSCAN_DETECTOR

std::vector<SmellFinding> detect_all(const model::SourceModel& model, const metrics::MetricsMap& metrics,
                                     const rules::RuleConfig& config)
{
    std::vector<SmellFinding> all;
    for (SmellKind kind : kAllSmellKinds) {
        std::vector<SmellFinding> found = detect(kind, model, metrics, config);
        all.insert(all.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
    }
    std::stable_sort(all.begin(), all.end(), finding_less);
    all.erase(std::unique(all.begin(), all.end(),
                          [](const SmellFinding& a, const SmellFinding& b) {
                              return a.kind == b.kind && a.qualified_name == b.qualified_name;
                          }),
              all.end());
    return all;
}

} // namespace smellscan::detect
