#pragma once

#include <smellscan/detect/detectors.hpp>
#include <smellscan/frontend/parser.hpp>
#include <smellscan/metrics/metrics.hpp>
#include <smellscan/model/model.hpp>
#include <smellscan/report/reporting.hpp>
#include <smellscan/rules/rule_cards.hpp>

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <vector>

namespace smellscan::cli {

/// Exit codes: success, fatal configuration or I/O error, partial input.
inline constexpr int kExitOk = 0;
inline constexpr int kExitFatal = 1;
inline constexpr int kExitPartial = 2;

enum class Command { Analyze, Evaluate, MetricsDump, ModelDump };

struct RunConfig {
    Command command = Command::Analyze;
    std::filesystem::path src;
    std::optional<std::filesystem::path> rules;
    std::filesystem::path out = "provenance.log";
    std::optional<std::filesystem::path> summary_out;
    report::Format format = report::Format::Text;
    bool fixed_timestamp = false;
    std::filesystem::path findings;
    std::filesystem::path truth;
    unsigned threads = 0;
};

/// Everything one analysis produces.
struct Analysis {
    std::vector<frontend::ParseFailure> failures;
    std::vector<model::ModelError> model_errors;
    model::SourceModel model;
    metrics::MetricsMap metrics;
    std::vector<detect::SmellFinding> findings;

    bool partial() const { return !failures.empty() || !model_errors.empty(); }
};

/// Parse, model, resolve, measure, detect. Throws ConfigError for a bad root.
Analysis analyze_tree(const std::filesystem::path& root, const rules::RuleConfig& config,
                      unsigned threads = 0);

/// Diagnostics go to `err`; the summary goes to `out` unless `summary_out` is set.
int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_metrics_dump(const RunConfig& config, std::ostream& out, std::ostream& err);
int run_model_dump(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses the command line and dispatches to a subcommand.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace smellscan::cli
