#include <smellscan/error.hpp>
#include <smellscan/eval/evaluation.hpp>

#include "support/test_support.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace smellscan;

namespace {

double round1(double percent) { return std::round(percent * 10.0) / 10.0; }

eval::PrecisionTable table_of(const std::array<smellscan::testing::PrecisionRow, 9>& rows)
{
    eval::PrecisionTable t;
    for (std::size_t i = 0; i < rows.size(); ++i) t[i] = eval::precision_of(rows[i].suspected, rows[i].confirmed);
    return t;
}

} // namespace

TEST(Precision, SixtySuspectedFiftySixConfirmed)
{
    EXPECT_EQ(round1(100 * eval::precision_of(60, 56).precision), 93.3);
    EXPECT_DOUBLE_EQ(eval::precision_of(0, 0).precision, 1.0);
}

TEST(Precision, PublishedRowsAndMacroAverages)
{
    const eval::PrecisionTable s5 = table_of(smellscan::testing::kPublishedPrecisionS5);
    for (std::size_t i = 0; i < 9; ++i) {
        EXPECT_NEAR(round1(100 * s5[i].precision), smellscan::testing::kPublishedPrecisionS5[i].published_percent, 1e-9) << i;
    }
    EXPECT_NEAR(100 * eval::macro_precision(s5), 81.01, 0.05);
    EXPECT_NEAR(100 * eval::macro_precision(table_of(smellscan::testing::kPublishedPrecisionS11)), 93.43, 0.05);
}

TEST(Precision, CountedFromFindingsAndTruth)
{
    eval::GroundTruth truth;
    std::vector<eval::SmellKey> findings;
    for (int i = 0; i < 4; ++i) {
        const eval::SmellKey key{SmellKind::BrokenHierarchy, "T" + std::to_string(i)};
        truth.entries[key] = i < 3 ? eval::Verdict::TrueSmell : eval::Verdict::NotSmell;
        findings.push_back(key);
    }
    findings.push_back(findings.front());  // duplicates count once
    const eval::PrecisionTable t = eval::precision_per_smell(findings, truth);
    EXPECT_EQ(t[index_of(SmellKind::BrokenHierarchy)].suspected, 4);
    EXPECT_EQ(t[index_of(SmellKind::BrokenHierarchy)].confirmed, 3);
    EXPECT_DOUBLE_EQ(t[index_of(SmellKind::BrokenHierarchy)].precision, 0.75);
    EXPECT_DOUBLE_EQ(t[index_of(SmellKind::WideHierarchy)].precision, 1.0);
}

TEST(Precision, FindingWithoutVerdictIsAnError)
{
    eval::GroundTruth truth;
    EXPECT_THROW(eval::precision_per_smell({{SmellKind::WideHierarchy, "A"}}, truth), EvaluationError);
}

TEST(Recall, ThreeOfFourTrueSmells)
{
    eval::GroundTruth truth;
    truth.complete = true;
    for (int i = 0; i < 4; ++i) truth.entries[{SmellKind::WideHierarchy, "T" + std::to_string(i)}] = eval::Verdict::TrueSmell;
    truth.entries[{SmellKind::WideHierarchy, "N"}] = eval::Verdict::NotSmell;
    const std::vector<eval::SmellKey> found = {{SmellKind::WideHierarchy, "T0"}, {SmellKind::WideHierarchy, "T1"},
                                               {SmellKind::WideHierarchy, "T2"}, {SmellKind::WideHierarchy, "N"}};
    const eval::Recall r = eval::recall(found, truth);
    ASSERT_TRUE(r.value.has_value());
    EXPECT_DOUBLE_EQ(*r.value, 0.75);
    EXPECT_EQ(r.detected, 3);
    EXPECT_EQ(r.true_smells, 4);

    truth.complete = false;
    const eval::Recall undefined = eval::recall(found, truth);
    EXPECT_FALSE(undefined.value.has_value());
    EXPECT_FALSE(undefined.reason.empty());
}

TEST(GroundTruthFile, ParsesDirectivesCommentsAndVerdicts)
{
    const eval::GroundTruth t = eval::parse_ground_truth(
        "#!complete\n# comment\n\nwide_hierarchy\tp.Base\ttrue-smell\r\nbroken_hierarchy\tp.X\tnot-smell\n");
    EXPECT_TRUE(t.complete);
    ASSERT_EQ(t.entries.size(), 2u);
    EXPECT_EQ(t.entries.at({SmellKind::WideHierarchy, "p.Base"}), eval::Verdict::TrueSmell);
    EXPECT_FALSE(eval::parse_ground_truth("wide_hierarchy\tA\tnot-smell\n").complete);
}

TEST(GroundTruthFile, ErrorsNameTheLine)
{
    auto message = [](std::string_view text) {
        try {
            eval::parse_ground_truth(text);
        } catch (const LoadError& e) {
            return std::string(e.what());
        }
        return std::string("no error");
    };
    EXPECT_NE(message("wide_hierarchy\tA\ttrue-smell\nwide_hierarchy\tA\tnot-smell\n").find("line 2"),
              std::string::npos);
    EXPECT_NE(message("wide_hierarchy\tA\tmaybe\n").find("line 1"), std::string::npos);
    EXPECT_NE(message("# x\nnope\tA\ttrue-smell\n").find("line 2"), std::string::npos);
    EXPECT_NE(message("wide_hierarchy A true-smell\n").find("line 1"), std::string::npos);
}

TEST(Report, TextAndTsvCarryMacroAndRecall)
{
    eval::EvaluationReport r;
    r.per_smell = table_of(smellscan::testing::kPublishedPrecisionS5);
    r.macro = eval::macro_precision(r.per_smell);
    r.recall.reason = "ground truth is not marked complete";
    const std::string text = eval::render_report(r, report::Format::Text);
    EXPECT_NE(text.find("Macro precision: 81.01%"), std::string::npos) << text;
    EXPECT_NE(text.find("Recall: undefined (ground truth is not marked complete)"), std::string::npos);
    const std::string tsv = eval::render_report(r, report::Format::Tsv);
    EXPECT_NE(tsv.find("\nmacro_precision\t81.01\n"), std::string::npos) << tsv;
    EXPECT_NE(tsv.find("Unutilized Abstraction\t60\t56\t93.33\n"), std::string::npos);
}
