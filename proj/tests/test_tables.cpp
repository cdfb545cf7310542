#include <gtest/gtest.h>

#include <stdexcept>

#include "oracles.hpp"
#include "rankcrank/format.hpp"
#include "rankcrank/partition.hpp"
#include "rankcrank/tables.hpp"

namespace {

using namespace rankcrank;

class Tables : public ::testing::Test {
protected:
    static void SetUpTestSuite() { table_ = new StatTable(build(60)); }
    static void TearDownTestSuite() {
        delete table_;
        table_ = nullptr;
    }
    static const StatTable& t() { return *table_; }

private:
    static inline StatTable* table_ = nullptr;
};

TEST_F(Tables, RowFourMatchesTheListing) {
    const StatTable t4 = build(4);
    for (int m = -4; m <= 4; ++m) {
        const bool crank_hit = m == -4 || m == -2 || m == 0 || m == 2 || m == 4;
        const bool rank_hit = m == -3 || m == -1 || m == 0 || m == 1 || m == 3;
        EXPECT_EQ(t4.crank_count(m, 4), crank_hit ? 1 : 0) << "m=" << m;
        EXPECT_EQ(t4.rank_count(m, 4), rank_hit ? 1 : 0) << "m=" << m;
    }
    EXPECT_EQ(t4.crank_count(0, 4), 1);
}

TEST_F(Tables, CrankConventionAtOne) {
    EXPECT_EQ(t().crank_count(0, 1), -1);
    EXPECT_EQ(t().crank_count(1, 1), 1);
    EXPECT_EQ(t().crank_count(-1, 1), 1);
    EXPECT_EQ(t().crank_row_total(1), 1);
    EXPECT_EQ(t().rank_count(0, 1), 1);
}

TEST_F(Tables, MatchOracleTally) {
    for (int n = 1; n <= 20; ++n) {
        for (int m = -n - 1; m <= n + 1; ++m) {
            ASSERT_EQ(t().rank_count(m, n), oracle::rank_count(m, n)) << m << "," << n;
            ASSERT_EQ(t().crank_count(m, n), oracle::crank_count(m, n)) << m << "," << n;
        }
    }
}

TEST_F(Tables, OutOfRangeRowsThrow) {
    EXPECT_THROW(static_cast<void>(t().rank_count(0, 0)), std::out_of_range);
    EXPECT_THROW(static_cast<void>(t().rank_count(0, 61)), std::out_of_range);
    EXPECT_THROW(build(0), std::invalid_argument);
}

TEST_F(Tables, Cumulations) {
    EXPECT_EQ(cum_rank(t(), -1, 4), 2);
    EXPECT_EQ(cum_rank(t(), 4, 4), 5);
    EXPECT_EQ(cum_rank(t(), -5, 4), 0);
    EXPECT_EQ(cum_crank(t(), -1, 4), 2);
    EXPECT_EQ(cum_crank(t(), 0, 1), 0);
    EXPECT_EQ(cum_crank(t(), 1, 1), 1);
    EXPECT_EQ(cum_crank(t(), 0, 4), 3);
}

TEST_F(Tables, RankSetCounts) {
    const RankSetCounts q(30);
    EXPECT_EQ(q.q(0, 4), 3);
    EXPECT_EQ(q_count(0, 4), 3);
    EXPECT_EQ(q.q(-1, 1), 1);
    EXPECT_EQ(q_count(-1, 1), 1);
    for (int n = 1; n <= 30; ++n) {
        EXPECT_EQ(q.q(n, n), partition_count(n));
        EXPECT_EQ(q.q(n + 5, n), partition_count(n));
        EXPECT_EQ(q.q(-n - 1, n), 0);
    }
    for (int n = 1; n <= 12; ++n) {
        for (int m = -n - 2; m <= n + 2; ++m) EXPECT_EQ(q.q(m, n), q_count(m, n)) << m << "," << n;
    }
}

TEST_F(Tables, RankAtLeast) {
    EXPECT_EQ(p_ge(t(), 1, 4), 2);
    EXPECT_EQ(p_ge(t(), -4, 4), 5);
    EXPECT_EQ(p_ge(t(), 0, 5), 4);
}

TEST_F(Tables, Moments) {
    EXPECT_EQ(moment_crank(t(), 2, 5), 70);
    EXPECT_EQ(moment_rank(t(), 2, 5), 42);
    for (int n = 1; n <= 60; ++n) {
        EXPECT_EQ(moment_rank(t(), 1, n), 0);
        EXPECT_EQ(moment_crank(t(), 2, n), 2 * n * t().row_total(n)) << "n=" << n;
    }
    EXPECT_THROW(moment_rank(t(), -1, 4), std::invalid_argument);
}

TEST_F(Tables, Spt) {
    EXPECT_EQ(spt(t(), 1), 1);
    EXPECT_EQ(spt(t(), 4), 10);
    EXPECT_EQ(spt(t(), 5), 14);
    for (int n = 1; n <= 40; ++n) EXPECT_EQ(spt(t(), n), spt_direct(n)) << "n=" << n;
}

TEST_F(Tables, OsptByMoments) {
    EXPECT_EQ(ospt_moments(t(), 2), 1);
    EXPECT_EQ(ospt_moments(t(), 4), 2);
    EXPECT_EQ(ospt_moments(t(), 5), 2);
    const std::vector<count_t> want{1, 1, 1, 2, 2, 4, 5};
    for (int n = 1; n <= 7; ++n) EXPECT_EQ(ospt_moments(t(), n), want[n - 1]);
}

TEST_F(Tables, AbsCrankSum) {
    EXPECT_EQ(abs_crank_sum(t(), 1), 1);
    EXPECT_EQ(abs_crank_sum(t(), 4), 12);
    EXPECT_EQ(abs_crank_sum(t(), 5), 18);
}

TEST(TablesAccelerated, AgreesWithEnumerationUpTo45) {
    const StatTable a = build_accelerated(45);
    const StatTable e = build(45);
    EXPECT_EQ(a, e);
    EXPECT_EQ(a.provenance(), Provenance::accelerated);
    EXPECT_EQ(e.provenance(), Provenance::enumerated);
}

TEST(TablesAccelerated, ReachesOneHundred) {
    const StatTable a = build_accelerated(100);
    EXPECT_EQ(a.row_total(100), 190569292);
    EXPECT_EQ(a.crank_row_total(100), 190569292);
}

TEST(TableFormat, CsvCarriesBothCounts) {
    const StatTable t = build(10);
    const std::string csv = format::table_csv(t, 1, 10);
    EXPECT_EQ(csv.substr(0, csv.find('\n')), "n,m,N,M");
    std::size_t lines = 0;
    for (char c : csv) lines += c == '\n';
    EXPECT_EQ(lines, 1u + 120u);  // sum of 2n+1 for n = 1..10
    EXPECT_NE(csv.find("\n1,0,1,-1\n"), std::string::npos);
}

TEST(TableFormat, JsonIncludesConventionRow) {
    const StatTable t = build(1);
    const auto j = format::table_json(t, format::Stat::both, 1, 1);
    EXPECT_EQ(j["rows"][0]["M"]["0"], -1);
    EXPECT_EQ(j["rows"][0]["M"]["1"], 1);
    EXPECT_EQ(j["rows"][0]["M"]["-1"], 1);
    EXPECT_EQ(j["rows"][0]["N"]["0"], 1);
    EXPECT_EQ(j["provenance"], "enumerated");
}

}  // namespace
