#pragma once

#include <smellscan/metrics/metrics.hpp>
#include <smellscan/model/model.hpp>
#include <smellscan/rules/rule_cards.hpp>
#include <smellscan/smell_kind.hpp>

#include <string>
#include <vector>

namespace smellscan::detect {

struct SmellFinding {
    SmellKind kind = SmellKind::UnutilizedAbstraction;
    std::string qualified_name;
    std::string file;
    int line = 0;
    rules::Evidence evidence;

    friend bool operator==(const SmellFinding&, const SmellFinding&) = default;
};

/// Orders by (kind, qualified name).
bool finding_less(const SmellFinding& a, const SmellFinding& b);

/// All types suspected of `kind` under the config, sorted by qualified name.
std::vector<SmellFinding> detect(SmellKind kind, const model::SourceModel& model,
                                 const metrics::MetricsMap& metrics, const rules::RuleConfig& config);

std::vector<SmellFinding> detect_unutilized_abstraction(const model::SourceModel&, const metrics::MetricsMap&,
                                                        const rules::RuleConfig&);
std::vector<SmellFinding> detect_insufficient_modularization(const model::SourceModel&,
                                                             const metrics::MetricsMap&,
                                                             const rules::RuleConfig&);
std::vector<SmellFinding> detect_broken_hierarchy(const model::SourceModel&, const metrics::MetricsMap&,
                                                  const rules::RuleConfig&);
std::vector<SmellFinding> detect_deficient_encapsulation(const model::SourceModel&, const metrics::MetricsMap&,
                                                         const rules::RuleConfig&);
std::vector<SmellFinding> detect_cyclic_dependent_modularization(const model::SourceModel&,
                                                                 const metrics::MetricsMap&,
                                                                 const rules::RuleConfig&);
std::vector<SmellFinding> detect_unnecessary_abstraction(const model::SourceModel&, const metrics::MetricsMap&,
                                                         const rules::RuleConfig&);
std::vector<SmellFinding> detect_multifaceted_abstraction(const model::SourceModel&, const metrics::MetricsMap&,
                                                          const rules::RuleConfig&);
std::vector<SmellFinding> detect_wide_hierarchy(const model::SourceModel&, const metrics::MetricsMap&,
                                                const rules::RuleConfig&);
std::vector<SmellFinding> detect_missing_hierarchy(const model::SourceModel&, const metrics::MetricsMap&,
                                                   const rules::RuleConfig&);

/// Union of the nine detectors, deduplicated and sorted by (kind, name).
std::vector<SmellFinding> detect_all(const model::SourceModel& model, const metrics::MetricsMap& metrics,
                                     const rules::RuleConfig& config);

} // namespace smellscan::detect
