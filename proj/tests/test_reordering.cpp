#include <gtest/gtest.h>

#include <stdexcept>

#include "rankcrank/format.hpp"
#include "rankcrank/reordering.hpp"
#include "rankcrank/tables.hpp"

namespace {

using namespace rankcrank;

TEST(Tau, FourMatchesTheListing) {
    for (TieBreak tb : {TieBreak::lex_descending, TieBreak::lex_ascending}) {
        const auto r = build_tau(4, tb);
        std::vector<std::pair<std::string, std::string>> got;
        std::vector<int> diffs;
        for (const auto& p : r.pairs()) {
            got.emplace_back(to_string(r.source(p)), to_string(r.image(p)));
            diffs.push_back(p.difference());
        }
        const std::vector<std::pair<std::string, std::string>> want{{"(1,1,1,1)", "(1,1,1,1)"},
                                                                    {"(2,1,1)", "(2,1,1)"},
                                                                    {"(3,1)", "(2,2)"},
                                                                    {"(2,2)", "(3,1)"},
                                                                    {"(4)", "(4)"}};
        EXPECT_EQ(got, want);
        EXPECT_EQ(diffs, (std::vector<int>{-1, -1, 0, 1, 1}));
        EXPECT_TRUE(verify_tau(r).pass);
        EXPECT_EQ(ospt_via_tau(r), 2);
        EXPECT_TRUE(fixed_point_check(r));
    }
}

TEST(Tau, RejectsSmallN) {
    EXPECT_THROW(build_tau(1), std::invalid_argument);
    EXPECT_THROW(build_tau(0), std::invalid_argument);
}

TEST(Tau, TieBreakParsing) {
    EXPECT_EQ(parse_tie_break("lex-desc"), TieBreak::lex_descending);
    EXPECT_EQ(parse_tie_break("lex-asc"), TieBreak::lex_ascending);
    EXPECT_THROW(parse_tie_break("random"), std::invalid_argument);
}

TEST(Tau, TieBreaksCanDisagreeOnPairingAtSix) {
    const auto a = build_tau(6, TieBreak::lex_descending);
    const auto b = build_tau(6, TieBreak::lex_ascending);
    bool differ = false;
    for (std::size_t i = 0; i < a.pairs().size(); ++i) {
        differ = differ || a.pairs()[i].source != b.pairs()[i].source || a.pairs()[i].image != b.pairs()[i].image;
    }
    EXPECT_TRUE(differ);
    EXPECT_TRUE(verify_tau(a).pass);
    EXPECT_TRUE(verify_tau(b).pass);
}

TEST(Tau, PairingIsABijection) {
    for (int n = 2; n <= 20; ++n) {
        const auto r = build_tau(n);
        std::vector<int> seen_src(r.partitions().size()), seen_img(r.partitions().size());
        for (const auto& p : r.pairs()) {
            ++seen_src[p.source];
            ++seen_img[p.image];
        }
        for (std::size_t i = 0; i < seen_src.size(); ++i) {
            ASSERT_EQ(seen_src[i], 1);
            ASSERT_EQ(seen_img[i], 1);
        }
    }
}

TEST(Tau, ConsequencesHoldUpTo40UnderBothTieBreaks) {
    const StatTable t = build(40);
    for (int n = 2; n <= 40; ++n) {
        for (TieBreak tb : {TieBreak::lex_descending, TieBreak::lex_ascending}) {
            const auto r = build_tau(n, tb);
            ASSERT_TRUE(verify_tau(r).pass) << "n=" << n;
            ASSERT_EQ(ospt_via_tau(r), ospt_moments(t, n)) << "n=" << n;
            ASSERT_TRUE(fixed_point_check(r));
            ASSERT_TRUE(verify_cumulation_brackets(r, t).pass);
            ASSERT_TRUE(verify_sign_containment(r).pass);
            const auto s = positive_rank_sums(r);
            ASSERT_EQ(s.positive_ranks, s.ranks_under_positive_cranks);
        }
    }
}

TEST(Tau, CaseConditionDetectsViolations) {
    EXPECT_TRUE(tau_case_holds(0, 0));
    EXPECT_FALSE(tau_case_holds(0, 1));
    EXPECT_TRUE(tau_case_holds(3, 2));
    EXPECT_FALSE(tau_case_holds(3, 1));
    EXPECT_TRUE(tau_case_holds(-3, -2));
    EXPECT_FALSE(tau_case_holds(-3, -4));
}

TEST(TauFormat, TextHasFiveColumnsAndFiveRows) {
    const std::string text = format::tau_text(build_tau(4));
    const std::string want =
        "lambda     crank(lambda)  tau_4(lambda)  rank(tau_4(lambda))  difference\n"
        "(1,1,1,1)  -4             (1,1,1,1)      -3                   -1\n"
        "(2,1,1)    -2             (2,1,1)        -1                   -1\n"
        "(3,1)      0              (2,2)          0                    0\n"
        "(2,2)      2              (3,1)          1                    1\n"
        "(4)        4              (4)            3                    1\n";
    EXPECT_EQ(text, want);
}

TEST(TauFormat, JsonAndCsv) {
    const auto r = build_tau(4);
    const auto j = format::tau_json(r);
    EXPECT_EQ(j["n"], 4);
    EXPECT_EQ(j["pairs"].size(), 5u);
    EXPECT_EQ(j["pairs"][2]["image"], (std::vector<int>{2, 2}));
    const std::string csv = format::tau_csv(r);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "lambda,crank,image,rank,difference");
    EXPECT_NE(csv.find("\"(3,1)\",0,\"(2,2)\",0,0"), std::string::npos);
}

}  // namespace
