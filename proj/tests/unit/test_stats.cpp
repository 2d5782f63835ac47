#include "pcade/stats.hpp"
#include "pcade/rng.hpp"

#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace pcade;

namespace {

RunRecord run(double f, double v, Vector viol = {}) {
    RunRecord r;
    r.problem = "p";
    r.algorithm = "a";
    r.dimension = 2;
    r.f = f;
    r.v = v;
    r.feasible = v == 0.0;
    r.constraint_violations = viol.empty() ? Vector{v} : viol;
    r.constraint_count = r.constraint_violations.size();
    return r;
}

} // namespace

TEST(Summarize, AllFeasible) {
    std::vector<RunRecord> runs;
    for (int k = 0; k < 25; ++k) {
        runs.push_back(run(k, 0.0));
    }
    const auto s = summarize(runs);
    EXPECT_EQ(s.sr, 100.0);
    EXPECT_EQ(s.c1 + s.c2 + s.c3, 0u);
    EXPECT_EQ(s.vbar, 0.0);
    EXPECT_EQ(s.best, 0.0);
    EXPECT_EQ(s.median, 12.0);
    EXPECT_EQ(s.worst, 24.0);
    EXPECT_EQ(s.mean, 12.0);
    // sample variance of 0..24 is 25 * 26 / 12
    EXPECT_NEAR(s.std, std::sqrt(25.0 * 26.0 / 12.0), 1e-12);
}

TEST(Summarize, FeasibleBeatsInfeasibleForMedian) {
    const std::vector<RunRecord> runs{run(-100, 0.5), run(3, 0.0)};
    const auto s = summarize(runs);
    EXPECT_EQ(s.sr, 50.0);
    EXPECT_EQ(s.median, 3.0);
    EXPECT_TRUE(s.median_feasible);
    EXPECT_EQ(s.mean, -48.5);
}

TEST(Summarize, ViolationBucketsAtMedian) {
    const std::vector<RunRecord> runs{run(0, 2.5 + 0.5 + 0.005 + 0.00005, {2.5, 0.5, 0.005, 0.00005})};
    const auto s = summarize(runs);
    EXPECT_EQ(s.c1, 1u);
    EXPECT_EQ(s.c2, 1u);
    EXPECT_EQ(s.c3, 1u);
    EXPECT_NEAR(s.vbar, (2.5 + 0.5 + 0.005 + 0.00005) / 4.0, 1e-15);
    EXPECT_EQ(s.sr, 0.0);
}

TEST(Summarize, BucketEdges) {
    const std::vector<RunRecord> runs{run(0, 2.0101, {1.0, 0.01, 1e-4, 1.0000001})};
    const auto s = summarize(runs);
    EXPECT_EQ(s.c1, 1u);
    EXPECT_EQ(s.c2, 2u);
    EXPECT_EQ(s.c3, 1u);
}

TEST(Summarize, VioIsMeanOverRuns) {
    const std::vector<RunRecord> runs{run(0, 0.0, {0, 0}), run(1, 4.0, {4, 0})};
    EXPECT_DOUBLE_EQ(summarize(runs).vio, (0.0 + 2.0) / 2.0);
}

TEST(Summarize, EvenCountTakesLowerMiddle) {
    const std::vector<RunRecord> runs{run(4, 0), run(1, 0), run(3, 0), run(2, 0)};
    EXPECT_EQ(summarize(runs).median, 2.0);
}

TEST(Summarize, EmptyThrows) {
    EXPECT_THROW(summarize(std::span<const RunRecord>{}), std::invalid_argument);
    std::vector<RunRecord> failed(2);
    failed[0].error = failed[1].error = "boom";
    EXPECT_THROW(summarize(failed), std::invalid_argument);
}

TEST(Summarize, SkipsFailedRuns) {
    std::vector<RunRecord> runs{run(1, 0), run(2, 0)};
    runs[1].error = "boom";
    const auto s = summarize(runs);
    EXPECT_EQ(s.runs, 1u);
    EXPECT_EQ(s.mean, 1.0);
}

TEST(Summarize, MatchesSortOracle) {
    Rng rng(1);
    for (int trial = 0; trial < 3000; ++trial) {
        std::vector<RunRecord> runs;
        const std::size_t n = 1 + rng.below(8);
        for (std::size_t k = 0; k < n; ++k) {
            const double v = rng.uniform() < 0.5 ? 0.0 : static_cast<double>(rng.below(4));
            runs.push_back(run(static_cast<double>(rng.below(6)) - 2.0, v));
        }
        const auto s = summarize(runs);
        const auto o = oracle::summarize(runs);
        ASSERT_EQ(s.best, o.best);
        ASSERT_EQ(s.median, o.median);
        ASSERT_EQ(s.worst, o.worst);
    }
}
