#include <smellscan/cli/cli.hpp>

#include <smellscan/error.hpp>
#include <smellscan/eval/evaluation.hpp>

#include <CLI11.hpp>

#include <ostream>

namespace smellscan::cli {

Analysis analyze_tree(const std::filesystem::path& root, const rules::RuleConfig& config, unsigned threads)
{
    Analysis a;
    frontend::ProjectParse parsed = frontend::parse_project(root, threads);
    a.failures = std::move(parsed.failures);
    model::BuildResult built = model::build_model(std::move(parsed.units));
    a.model_errors = std::move(built.errors);
    a.model = model::resolve_references(std::move(built.model));
    a.metrics = metrics::compute_metrics(a.model);
    a.findings = detect::detect_all(a.model, a.metrics, config);
    return a;
}

namespace {

void report_problems(const Analysis& a, std::ostream& err)
{
    for (const frontend::ParseFailure& f : a.failures) {
        err << f.path << ':' << f.line << ':' << f.column << ": error: " << f.message << '\n';
    }
    for (const model::ModelError& e : a.model_errors) {
        err << e.second_file << ": error: " << e.message << '\n';
    }
}

template <class Body>
int guarded(std::ostream& err, Body body)
{
    try {
        return body();
    } catch (const Error& e) {
        err << "smellscan: " << e.what() << '\n';
        return kExitFatal;
    } catch (const std::exception& e) {
        err << "smellscan: " << e.what() << '\n';
        return kExitFatal;
    }
}

} // namespace

int run_analyze(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const rules::RuleConfig rules = rules::load_rule_config(config.rules);
        const Analysis a = analyze_tree(config.src, rules, config.threads);
        report_problems(a, err);
        report::write_provenance(a.findings, config.out, config.fixed_timestamp);
        const std::string summary = report::render_summary(report::summarize(a.findings), config.format);
        if (config.summary_out) {
            report::write_text_file(*config.summary_out, summary);
        } else {
            out << summary;
        }
        return a.partial() ? kExitPartial : kExitOk;
    });
}

int run_evaluate(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const auto records = report::load_provenance(config.findings);
        const eval::GroundTruth truth = eval::load_ground_truth(config.truth);
        const eval::EvaluationReport r = eval::evaluate(eval::keys_of(records), truth);
        out << eval::render_report(r, config.format);
        return kExitOk;
    });
}

int run_metrics_dump(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        const Analysis a = analyze_tree(config.src, rules::load_rule_config(config.rules), config.threads);
        report_problems(a, err);
        out << metrics::dump_metrics(a.metrics);
        return a.partial() ? kExitPartial : kExitOk;
    });
}

int run_model_dump(const RunConfig& config, std::ostream& out, std::ostream& err)
{
    return guarded(err, [&] {
        frontend::ProjectParse parsed = frontend::parse_project(config.src, config.threads);
        model::BuildResult built = model::build_model(std::move(parsed.units));
        Analysis a;
        a.failures = std::move(parsed.failures);
        a.model_errors = std::move(built.errors);
        report_problems(a, err);
        out << model::dump_model(model::resolve_references(std::move(built.model)));
        return a.partial() ? kExitPartial : kExitOk;
    });
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Detects object-oriented design smells in Java source trees.", "smellscan"};
    app.require_subcommand(1);

    RunConfig config;
    std::string format = "text";
    std::string rules_path;
    std::string summary_path;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "tsv"}));
    };
    auto add_source = [&](CLI::App* cmd) {
        cmd->add_option("--src", config.src, "Root directory of the Java sources")->required();
        cmd->add_option("--rules", rules_path, "Rule config file");
        cmd->add_option("--threads", config.threads, "Parser threads (0 = all cores)");
    };

    CLI::App* analyze = app.add_subcommand("analyze", "Detect smells and write the provenance log");
    add_source(analyze);
    analyze->add_option("--out", config.out, "Provenance log path")->capture_default_str();
    analyze->add_option("--summary-out", summary_path, "Write the summary here instead of stdout");
    analyze->add_flag("--fixed-timestamp", config.fixed_timestamp,
                      "Stamp records with 1970-01-01T00:00:00Z");
    add_format(analyze);

    CLI::App* evaluate = app.add_subcommand("evaluate", "Precision and recall against ground truth");
    evaluate->add_option("--findings", config.findings, "Provenance log")->required();
    evaluate->add_option("--truth", config.truth, "Ground-truth file")->required();
    add_format(evaluate);

    CLI::App* metrics_dump = app.add_subcommand("metrics-dump", "Print per-type metrics");
    add_source(metrics_dump);
    CLI::App* model_dump = app.add_subcommand("model-dump", "Print the layered model");
    add_source(model_dump);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "smellscan: " << e.what() << '\n';
        return kExitFatal;
    }

    config.format = report::parse_format(format);
    if (!rules_path.empty()) config.rules = rules_path;
    if (!summary_path.empty()) config.summary_out = summary_path;

    if (analyze->parsed()) {
        config.command = Command::Analyze;
        return run_analyze(config, out, err);
    }
    if (evaluate->parsed()) {
        config.command = Command::Evaluate;
        return run_evaluate(config, out, err);
    }
    if (metrics_dump->parsed()) {
        config.command = Command::MetricsDump;
        return run_metrics_dump(config, out, err);
    }
    config.command = Command::ModelDump;
    return run_model_dump(config, out, err);
}

} // namespace smellscan::cli
