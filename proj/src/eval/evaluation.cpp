#include <smellscan/eval/evaluation.hpp>

#include <smellscan/error.hpp>

#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

namespace smellscan::eval {

GroundTruth parse_ground_truth(std::string_view text)
{
    GroundTruth truth;
    int line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? std::string_view::npos
                                                                              : nl - pos);
        pos = nl == std::string_view::npos ? text.size() : nl + 1;
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);

        auto fail = [&](const std::string& why) {
            throw LoadError("ground truth line " + std::to_string(line_no) + ": " + why);
        };
        if (line == "#!complete") {
            truth.complete = true;
            continue;
        }
        if (line.find_first_not_of(" \t") == std::string_view::npos || line.front() == '#') continue;

        std::vector<std::string_view> fields;
        std::size_t start = 0;
        for (;;) {
            std::size_t tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab == std::string_view::npos ? std::string_view::npos
                                                                              : tab - start));
            if (tab == std::string_view::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 3) fail("expected kind<TAB>qualified-name<TAB>verdict");
        auto kind = parse_smell_kind(fields[0]);
        if (!kind) fail("unknown smell kind '" + std::string(fields[0]) + "'");
        if (fields[1].empty()) fail("empty qualified name");
        Verdict verdict;
        if (fields[2] == "true-smell") {
            verdict = Verdict::TrueSmell;
        } else if (fields[2] == "not-smell") {
            verdict = Verdict::NotSmell;
        } else {
            fail("verdict must be true-smell or not-smell");
        }
        if (!truth.entries.emplace(SmellKey{*kind, std::string(fields[1])}, verdict).second) {
            fail("duplicate entry for " + std::string(fields[0]) + " " + std::string(fields[1]));
        }
    }
    return truth;
}

GroundTruth load_ground_truth(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw LoadError("cannot read " + path.string());
    }
    std::ostringstream text;
    text << in.rdbuf();
    return parse_ground_truth(text.str());
}

SmellPrecision precision_of(long long suspected, long long confirmed)
{
    return {suspected, confirmed,
            suspected == 0 ? 1.0 : static_cast<double>(confirmed) / static_cast<double>(suspected)};
}

PrecisionTable precision_per_smell(const std::vector<SmellKey>& findings, const GroundTruth& truth)
{
    std::array<long long, kSmellKindCount> suspected{};
    std::array<long long, kSmellKindCount> confirmed{};
    for (const SmellKey& key : std::set<SmellKey>(findings.begin(), findings.end())) {
        auto it = truth.entries.find(key);
        if (it == truth.entries.end()) {
            throw EvaluationError("finding " + std::string(slug(key.first)) + " " + key.second +
                                  " has no ground-truth entry");
        }
        ++suspected[index_of(key.first)];
        if (it->second == Verdict::TrueSmell) ++confirmed[index_of(key.first)];
    }
    PrecisionTable table;
    for (std::size_t i = 0; i < kSmellKindCount; ++i) table[i] = precision_of(suspected[i], confirmed[i]);
    return table;
}

double macro_precision(const PrecisionTable& table)
{
    double sum = 0;
    for (const SmellPrecision& p : table) sum += p.precision;
    return sum / static_cast<double>(table.size());
}

Recall recall(const std::vector<SmellKey>& findings, const GroundTruth& truth)
{
    Recall r;
    const std::set<SmellKey> found(findings.begin(), findings.end());
    for (const auto& [key, verdict] : truth.entries) {
        if (verdict != Verdict::TrueSmell) continue;
        ++r.true_smells;
        if (found.contains(key)) ++r.detected;
    }
    if (!truth.complete) {
        r.reason = "ground truth is not marked complete";
        return r;
    }
    r.value = r.true_smells == 0 ? 1.0 : static_cast<double>(r.detected) / static_cast<double>(r.true_smells);
    return r;
}

EvaluationReport evaluate(const std::vector<SmellKey>& findings, const GroundTruth& truth)
{
    EvaluationReport report;
    report.per_smell = precision_per_smell(findings, truth);
    report.macro = macro_precision(report.per_smell);
    report.recall = recall(findings, truth);
    return report;
}

std::vector<SmellKey> keys_of(const std::vector<detect::SmellFinding>& findings)
{
    std::vector<SmellKey> keys;
    for (const detect::SmellFinding& f : findings) keys.emplace_back(f.kind, f.qualified_name);
    return keys;
}

std::vector<SmellKey> keys_of(const std::vector<report::ProvenanceRecord>& records)
{
    std::vector<SmellKey> keys;
    for (const report::ProvenanceRecord& r : records) keys.emplace_back(r.finding.kind, r.finding.qualified_name);
    return keys;
}

std::string render_report(const EvaluationReport& report, report::Format format)
{
    auto pct = [](double v) {
        char buf[32];
        std::snprintf(buf, sizeof buf, "%.2f", 100.0 * v);
        return std::string(buf);
    };
    std::size_t width = 5;
    for (SmellKind kind : kAllSmellKinds) width = std::max(width, display_name(kind).size());

    std::string out;
    auto row = [&](std::string_view name, const std::vector<std::string>& cells) {
        if (format == report::Format::Tsv) {
            out += name;
            for (const std::string& c : cells) out += '\t' + c;
        } else {
            out += std::string(name) + std::string(width - name.size(), ' ');
            for (const std::string& c : cells) out += "  " + c;
        }
        out += '\n';
    };
    if (format == report::Format::Tsv) {
        row("smell", {"suspected", "confirmed", "precision"});
    } else {
        row("Smell", {"Suspected", "Confirmed", "Precision"});
    }
    for (SmellKind kind : kAllSmellKinds) {
        const SmellPrecision& p = report.per_smell[index_of(kind)];
        row(display_name(kind), {std::to_string(p.suspected), std::to_string(p.confirmed), pct(p.precision)});
    }
    const std::string recall = report.recall.value ? pct(*report.recall.value)
                                                   : "undefined (" + report.recall.reason + ")";
    if (format == report::Format::Tsv) {
        out += "macro_precision\t" + pct(report.macro) + '\n';
        out += "recall\t" + recall + '\n';
    } else {
        out += "Macro precision: " + pct(report.macro) + "%\n";
        out += "Recall: " + recall + (report.recall.value ? "%" : "") + '\n';
    }
    return out;
}

} // namespace smellscan::eval
