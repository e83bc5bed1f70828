#pragma once

#include <smellscan/detect/detectors.hpp>
#include <smellscan/report/reporting.hpp>
#include <smellscan/smell_kind.hpp>

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace smellscan::eval {

enum class Verdict { TrueSmell, NotSmell };

using SmellKey = std::pair<SmellKind, std::string>;

struct GroundTruth {
    std::map<SmellKey, Verdict> entries;
    bool complete = false;  // annotations cover the whole corpus; enables recall
};

/// Lines `kind<TAB>qualified-name<TAB>true-smell|not-smell`; blank lines
/// and `#` comments are skipped; a `#!complete` line sets the completeness
/// flag. Throws LoadError naming the line.
GroundTruth parse_ground_truth(std::string_view text);
GroundTruth load_ground_truth(const std::filesystem::path& path);

struct SmellPrecision {
    long long suspected = 0;
    long long confirmed = 0;
    double precision = 1.0;  // 1.0 when nothing was suspected
};

using PrecisionTable = std::array<SmellPrecision, kSmellKindCount>;

SmellPrecision precision_of(long long suspected, long long confirmed);

/// Throws EvaluationError for a finding with no ground-truth entry.
PrecisionTable precision_per_smell(const std::vector<SmellKey>& findings, const GroundTruth& truth);

/// Unweighted mean of the nine per-smell precisions.
double macro_precision(const PrecisionTable& table);

struct Recall {
    std::optional<double> value;  // absent when the truth is incomplete
    std::string reason;
    long long detected = 0;
    long long true_smells = 0;
};

Recall recall(const std::vector<SmellKey>& findings, const GroundTruth& truth);

struct EvaluationReport {
    PrecisionTable per_smell{};
    double macro = 1.0;
    Recall recall;
};

EvaluationReport evaluate(const std::vector<SmellKey>& findings, const GroundTruth& truth);

std::vector<SmellKey> keys_of(const std::vector<detect::SmellFinding>& findings);
std::vector<SmellKey> keys_of(const std::vector<report::ProvenanceRecord>& records);

std::string render_report(const EvaluationReport& report, report::Format format);

} // namespace smellscan::eval
