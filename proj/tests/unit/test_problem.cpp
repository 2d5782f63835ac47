#include "pcade/problem.hpp"
#include "pcade/registry.hpp"
#include "pcade/rng.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <numeric>

using namespace pcade;

namespace {

double sum_sq(std::span<const double> x) {
    return std::inner_product(x.begin(), x.end(), x.begin(), 0.0);
}

Problem sphere_with_g() {
    return Problem("s", {-5, -5}, {5, 5}, sum_sq, {[](std::span<const double> x) { return x[0] - 1.0; }});
}

} // namespace

TEST(Evaluate, SatisfiedConstraintIsFeasible) {
    const auto e = sphere_with_g().evaluate(std::vector<double>{0, 0});
    EXPECT_EQ(e.f, 0.0);
    EXPECT_EQ(e.violation, 0.0);
    EXPECT_TRUE(e.feasible);
}

TEST(Evaluate, ViolatedInequality) {
    const auto e = sphere_with_g().evaluate(std::vector<double>{2, 0});
    ASSERT_EQ(e.inequality_violation.size(), 1u);
    EXPECT_EQ(e.inequality_violation[0], 1.0);
    EXPECT_EQ(e.violation, 1.0);
    EXPECT_FALSE(e.feasible);
}

TEST(Evaluate, EqualityWithinToleranceIsFeasible) {
    Problem p("h", {-1}, {1}, sum_sq, {}, {[](std::span<const double> x) { return x[0]; }}, 1e-4);
    const auto e = p.evaluate(std::vector<double>{5e-5});
    EXPECT_EQ(e.equality_violation[0], 0.0);
    EXPECT_TRUE(e.feasible);
    const auto outside = p.evaluate(std::vector<double>{3e-4});
    EXPECT_NEAR(outside.equality_violation[0], 2e-4, 1e-18);
    EXPECT_FALSE(outside.feasible);
}

TEST(Evaluate, RosenbrockMinimum) {
    EXPECT_EQ(rosenbrock(std::vector<double>{1, 1}), 0.0);
    EXPECT_EQ(rosenbrock(std::vector<double>{0, 0}), 1.0);
    EXPECT_EQ(rosenbrock(std::vector<double>{0, 1}), 101.0);
}

TEST(Evaluate, DimensionMismatchThrows) {
    EXPECT_THROW(sphere_with_g().evaluate(std::vector<double>{1}), DimensionMismatch);
}

TEST(Evaluate, NonFiniteConstraintFlagsWorstViolation) {
    Problem p("nan", {-1}, {1}, sum_sq, {[](std::span<const double>) { return std::nan(""); }});
    const auto e = p.evaluate(std::vector<double>{0});
    EXPECT_TRUE(e.non_finite);
    EXPECT_TRUE(std::isinf(e.violation));
    EXPECT_FALSE(e.feasible);
}

TEST(Evaluate, NonFiniteObjectiveIsPropagatedAndOrderedLast) {
    Problem p("nanf", {-1}, {1}, [](std::span<const double>) { return std::nan(""); });
    const auto e = p.evaluate(std::vector<double>{0});
    EXPECT_TRUE(e.non_finite);
    EXPECT_TRUE(std::isnan(e.f));
    EXPECT_EQ(e.ordering_f(), std::numeric_limits<double>::infinity());
}

TEST(Evaluate, EachFunctionCalledOnce) {
    int nf = 0, ng = 0, nh = 0;
    Problem p(
        "count", {-1}, {1}, [&](std::span<const double>) { ++nf; return 0.0; },
        {[&](std::span<const double>) { ++ng; return 0.0; }}, {[&](std::span<const double>) { ++nh; return 0.0; }});
    p.evaluate(std::vector<double>{0});
    EXPECT_EQ(nf, 1);
    EXPECT_EQ(ng, 1);
    EXPECT_EQ(nh, 1);
}

TEST(Evaluate, TighterDeltaNeverDecreasesViolation) {
    Problem loose("h", {-1, -1}, {1, 1}, sum_sq, {}, {[](std::span<const double> x) { return x[0] - x[1]; }}, 1e-2);
    const Problem tight = loose.with_equality_tolerance(1e-6);
    Rng rng(9);
    for (int k = 0; k < 500; ++k) {
        const auto x = random_point(loose, rng);
        ASSERT_GE(tight.evaluate(x).violation, loose.evaluate(x).violation);
    }
}

TEST(Evaluate, ViolationZeroIffAllConstraintsSatisfied) {
    const auto p = make_problem("sphere-linear", 3);
    Rng rng(10);
    for (int k = 0; k < 1000; ++k) {
        const auto x = random_point(p, rng);
        const auto e = p.evaluate(x);
        ASSERT_GE(e.violation, 0.0);
        const double g = x[0] + x[1] + x[2] - 1.5;
        ASSERT_EQ(e.feasible, g <= 0.0);
        ASSERT_EQ(e.feasible, e.violation == 0.0);
    }
}

TEST(ProblemInvariants, RejectsBadBounds) {
    EXPECT_THROW(Problem("bad", {1}, {1}, sum_sq), std::invalid_argument);
    EXPECT_THROW(Problem("bad", {0, 0}, {1}, sum_sq), DimensionMismatch);
    EXPECT_THROW(Problem("bad", {}, {}, sum_sq), std::invalid_argument);
    EXPECT_THROW(Problem("bad", {0}, {1}, sum_sq, {}, {}, -1.0), std::invalid_argument);
}

TEST(ProblemInvariants, UnconstrainedAllowed) {
    Problem p("free", {0}, {1}, sum_sq);
    EXPECT_EQ(p.constraint_count(), 0u);
    EXPECT_TRUE(p.evaluate(std::vector<double>{0.5}).feasible);
}

TEST(RandomPoint, MatchesFormulaOnSameStream) {
    Problem p("unit", {0}, {1}, sum_sq);
    Rng a(77), b(77);
    const auto x = random_point(p, a);
    EXPECT_EQ(x[0], 0.0 + (1.0 - 0.0) * b.uniform());
}

TEST(RandomPoint, MeanAndBounds) {
    Problem p("unit", {0, 0}, {1, 1}, sum_sq);
    Rng rng(11);
    double s0 = 0, s1 = 0;
    const int n = 10000;
    for (int k = 0; k < n; ++k) {
        const auto x = random_point(p, rng);
        ASSERT_TRUE(p.in_bounds(x));
        s0 += x[0];
        s1 += x[1];
    }
    EXPECT_NEAR(s0 / n, 0.5, 0.02);
    EXPECT_NEAR(s1 / n, 0.5, 0.02);
}

TEST(Registry, RosenbrockDiskOptimumByGridSearch) {
    const auto p = make_problem("rosenbrock-disk", 2);
    const auto at_opt = p.evaluate(std::vector<double>{1, 1});
    EXPECT_TRUE(at_opt.feasible);
    EXPECT_EQ(at_opt.f, 0.0);
    double best = std::numeric_limits<double>::infinity();
    std::vector<double> arg;
    for (int i = 0; i <= 300; ++i) {
        for (int j = 0; j <= 300; ++j) {
            const std::vector<double> x{-1.5 + 0.01 * i, -1.5 + 0.01 * j};
            const auto e = p.evaluate(x);
            if (e.feasible && e.f < best) {
                best = e.f;
                arg = x;
            }
        }
    }
    EXPECT_NEAR(arg[0], 1.0, 1e-9);
    EXPECT_NEAR(arg[1], 1.0, 1e-9);
}

TEST(Registry, SphereLinearOriginIsFeasibleOptimum) {
    const auto p = make_problem("sphere-linear", 10);
    EXPECT_EQ(p.dimension(), 10u);
    const auto e = p.evaluate(std::vector<double>(10, 0.0));
    EXPECT_TRUE(e.feasible);
    EXPECT_EQ(e.f, 0.0);
}

TEST(Registry, EqLineHasOneEquality) {
    const auto p = make_problem("eq-line", 4);
    EXPECT_EQ(p.equality_count(), 1u);
    EXPECT_TRUE(p.evaluate(std::vector<double>{2, 2, 0, 0}).feasible);
    EXPECT_FALSE(p.evaluate(std::vector<double>{2, 1, 0, 0}).feasible);
}

TEST(Registry, UnknownNameListsRegistered) {
    try {
        make_problem("no-such", 2);
        FAIL() << "expected UnknownProblem";
    } catch (const UnknownProblem& e) {
        const std::string msg = e.what();
        EXPECT_NE(msg.find("sphere-linear"), std::string::npos);
        EXPECT_NE(msg.find("rosenbrock-disk"), std::string::npos);
    }
}

TEST(Registry, UnsupportedDimension) {
    EXPECT_THROW(make_problem("rosenbrock-disk", 3), UnsupportedDimension);
    EXPECT_THROW(make_problem("eq-line", 1), UnsupportedDimension);
    EXPECT_THROW(make_problem("sphere-linear", 0), UnsupportedDimension);
}

TEST(Registry, CustomFactory) {
    auto reg = ProblemRegistry::with_builtins();
    reg.add("half", [](std::size_t n) { return Problem("half", Vector(n, 0.0), Vector(n, 0.5), sum_sq); });
    EXPECT_TRUE(reg.contains("half"));
    EXPECT_EQ(reg.get("half", 3).dimension(), 3u);
}

TEST(BetterSolution, FeasibleThenObjectiveThenViolation) {
    Evaluation feas_hi{5.0, {}, {}, 0.0, true, false};
    Evaluation feas_lo{1.0, {}, {}, 0.0, true, false};
    Evaluation inf_small{-9.0, {}, {}, 0.1, false, false};
    Evaluation inf_big{-10.0, {}, {}, 2.0, false, false};
    EXPECT_TRUE(better_solution(feas_lo, feas_hi));
    EXPECT_TRUE(better_solution(feas_hi, inf_small));
    EXPECT_TRUE(better_solution(inf_small, inf_big));
    EXPECT_FALSE(better_solution(feas_lo, feas_lo));
}
