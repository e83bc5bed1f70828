#include <smellscan/error.hpp>
#include <smellscan/report/reporting.hpp>

#include "support/test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

using namespace smellscan;
using smellscan::testing::read_file;
using smellscan::testing::TempDir;

namespace {

std::vector<detect::SmellFinding> nine_findings()
{
    std::vector<detect::SmellFinding> out;
    int line = 1;
    for (SmellKind kind : kAllSmellKinds) {
        out.push_back({kind, "p.T" + std::to_string(line), "p/T" + std::to_string(line) + ".java", line,
                       {{"a", std::to_string(line)}, {"b", "x,y"}}});
        ++line;
    }
    // Separator characters inside every field survive the round trip.
    out[4].qualified_name = "odd\tname\\with\nbreaks";
    out[4].evidence = {{"k=v", "a;b=c\td"}, {"empty", ""}};
    return out;
}

std::vector<detect::SmellFinding> from_counts(const std::array<long long, kSmellKindCount>& counts)
{
    std::vector<detect::SmellFinding> out;
    for (std::size_t i = 0; i < kSmellKindCount; ++i) {
        for (long long n = 0; n < counts[i]; ++n) {
            out.push_back({kAllSmellKinds[i], "T" + std::to_string(i) + "_" + std::to_string(n), "F.java", 1, {}});
        }
    }
    return out;
}

} // namespace

TEST(Provenance, EmptyFindingsWriteAnEmptyFile)
{
    TempDir dir;
    EXPECT_EQ(report::write_provenance({}, dir.path() / "provenance.log", true), 0u);
    EXPECT_EQ(read_file(dir.path() / "provenance.log"), "");
}

TEST(Provenance, RecordLayout)
{
    const detect::SmellFinding f{SmellKind::WideHierarchy, "p.Base", "p/Base.java", 3,
                                 {{"children", "12"}, {"min_children", "10"}}};
    EXPECT_EQ(report::format_record(f, report::kFixedTimestamp),
              "1970-01-01T00:00:00Z\twide_hierarchy\tp.Base\tp/Base.java\t3\tchildren=12;min_children=10");
}

TEST(Provenance, NineFindingsRoundTrip)
{
    TempDir dir;
    const auto findings = nine_findings();
    EXPECT_EQ(report::write_provenance(findings, dir.path() / "p.log", true), 9u);
    const std::string text = read_file(dir.path() / "p.log");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 9);
    const std::vector<report::ProvenanceRecord> back = report::load_provenance(dir.path() / "p.log");
    ASSERT_EQ(back.size(), 9u);
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_EQ(back[i].timestamp, report::kFixedTimestamp);
        EXPECT_EQ(back[i].finding, findings[i]);
    }
}

TEST(Provenance, EscapingIsReversible)
{
    for (const std::string s : {"", "plain", "a\tb", "a\\b", "line\nbreak\r", "\\t literal", "a;b=c"}) {
        const std::string escaped = report::escape_field(s);
        EXPECT_EQ(escaped.find('\t'), std::string::npos);
        EXPECT_EQ(escaped.find('\n'), std::string::npos);
        EXPECT_EQ(report::unescape_field(escaped), s);
    }
}

TEST(Provenance, FixedTimestampRunsAreIdentical)
{
    TempDir dir;
    report::write_provenance(nine_findings(), dir.path() / "a.log", true);
    report::write_provenance(nine_findings(), dir.path() / "b.log", true);
    EXPECT_EQ(read_file(dir.path() / "a.log"), read_file(dir.path() / "b.log"));
}

TEST(Provenance, LiveTimestampIsIso8601Utc)
{
    const std::string ts = report::current_timestamp();
    ASSERT_EQ(ts.size(), 20u);
    EXPECT_EQ(ts[4], '-');
    EXPECT_EQ(ts[10], 'T');
    EXPECT_EQ(ts.back(), 'Z');
}

TEST(Provenance, MalformedLinesAreRejected)
{
    EXPECT_THROW(report::parse_provenance("only\tthree\tfields\n"), LoadError);
    EXPECT_THROW(report::parse_provenance("t\tno_such_smell\tA\tA.java\t1\t\n"), LoadError);
    EXPECT_THROW(report::parse_provenance("t\twide_hierarchy\tA\tA.java\tx\t\n"), LoadError);
}

TEST(Provenance, UnwritablePathIsIoError)
{
    EXPECT_THROW(report::write_provenance({}, "/nonexistent/dir/provenance.log", true), IoError);
}

TEST(Summary, S5ColumnTotalsAndCyclicShare)
{
    const report::SummaryTable t = report::summarize(from_counts(smellscan::testing::kSummaryS5));
    EXPECT_EQ(t.total, 108);
    EXPECT_NEAR(t.percent(SmellKind::CyclicDependentModularization), 100.0 * 2 / 108, 1e-9);
    EXPECT_NEAR(t.percent(SmellKind::CyclicDependentModularization), 1.85, 0.005);
}

TEST(Summary, S7UnutilizedShare)
{
    const report::SummaryTable t = report::summarize_counts({884, 189, 47, 18, 252, 76, 18, 3, 0});
    EXPECT_EQ(t.total, 1487);
    EXPECT_NEAR(t.percent(SmellKind::UnutilizedAbstraction), 59.45, 0.005);
}

TEST(Summary, SingleKindIsWholeAndEmptyIsZero)
{
    const report::SummaryTable one = report::summarize_counts({0, 0, 0, 0, 0, 0, 0, 7, 0});
    EXPECT_DOUBLE_EQ(one.percent(SmellKind::WideHierarchy), 100.0);
    const report::SummaryTable none = report::summarize({});
    EXPECT_EQ(none.total, 0);
    for (SmellKind kind : kAllSmellKinds) EXPECT_DOUBLE_EQ(none.percent(kind), 0.0);
}

TEST(Summary, PercentagesSumToHundredForEveryColumn)
{
    for (const auto& [system, counts] : smellscan::testing::kPublishedCounts) {
        const report::SummaryTable t = report::summarize_counts(counts);
        EXPECT_EQ(t.total, std::accumulate(counts.begin(), counts.end(), 0LL)) << system;
        double sum = 0;
        for (SmellKind kind : kAllSmellKinds) sum += t.percent(kind);
        EXPECT_NEAR(sum, 100.0, 0.05) << system;
    }
}

TEST(Summary, TextRowLayout)
{
    const std::string text =
        report::render_summary(report::summarize_counts(smellscan::testing::kSummaryS5), report::Format::Text);
    EXPECT_NE(text.find("\nCyclic-Dependent Modularization  2  1.85\n"), std::string::npos) << text;
    EXPECT_NE(text.find("\nTotal"), std::string::npos);
}

TEST(Summary, TsvHasTheSameCells)
{
    const report::SummaryTable t = report::summarize_counts(smellscan::testing::kSummaryS5);
    std::istringstream text(report::render_summary(t, report::Format::Text));
    std::istringstream tsv(report::render_summary(t, report::Format::Tsv));
    std::string a, b;
    int rows = 0;
    std::getline(text, a);
    std::getline(tsv, b);
    EXPECT_EQ(b, "smell\tcount\tpercent");
    while (std::getline(text, a) && std::getline(tsv, b)) {
        const std::size_t tab = b.find('\t');
        ASSERT_NE(tab, std::string::npos);
        std::string cells = b.substr(tab);
        std::replace(cells.begin(), cells.end(), '\t', ' ');
        // Text rows end in "  count  percent"; compare the cells after the name.
        const std::string name = b.substr(0, tab);
        ASSERT_EQ(a.substr(0, name.size()), name);
        std::istringstream ta(a.substr(name.size())), tb(cells);
        std::string x, y;
        while (ta >> x) {
            ASSERT_TRUE(static_cast<bool>(tb >> y));
            EXPECT_EQ(x, y);
        }
        ++rows;
    }
    EXPECT_EQ(rows, 10);
}

TEST(Summary, FormatNames)
{
    EXPECT_EQ(report::parse_format("text"), report::Format::Text);
    EXPECT_EQ(report::parse_format("tsv"), report::Format::Tsv);
    EXPECT_THROW(report::parse_format("csv"), ConfigError);
}
