#include "pcade/rng.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <set>

using pcade::Rng;

TEST(Rng, SameSeedSameStream) {
    Rng a(42), b(42);
    for (int k = 0; k < 100; ++k) {
        ASSERT_EQ(a.next_u64(), b.next_u64());
    }
}

TEST(Rng, UniformInHalfOpenUnitInterval) {
    Rng rng(1);
    for (int k = 0; k < 10000; ++k) {
        const double u = rng.uniform();
        ASSERT_GE(u, 0.0);
        ASSERT_LT(u, 1.0);
    }
}

TEST(Rng, BelowStaysInRange) {
    Rng rng(2);
    std::set<std::size_t> seen;
    for (int k = 0; k < 1000; ++k) {
        const auto v = rng.below(7);
        ASSERT_LT(v, 7u);
        seen.insert(v);
    }
    EXPECT_EQ(seen.size(), 7u);
}

TEST(Rng, SampleWithoutReplacementIsDistinct) {
    Rng rng(3);
    for (int k = 0; k < 200; ++k) {
        auto s = rng.sample_without_replacement(10, 6);
        ASSERT_EQ(s.size(), 6u);
        std::sort(s.begin(), s.end());
        ASSERT_EQ(std::adjacent_find(s.begin(), s.end()), s.end());
        ASSERT_LT(s.back(), 10u);
    }
}

TEST(Rng, NormalMomentsRoughlyRight) {
    Rng rng(4);
    double sum = 0.0, sq = 0.0;
    const int n = 100000;
    for (int k = 0; k < n; ++k) {
        const double z = rng.normal(1.0, 2.0);
        sum += z;
        sq += z * z;
    }
    const double mean = sum / n;
    EXPECT_NEAR(mean, 1.0, 0.03);
    EXPECT_NEAR(sq / n - mean * mean, 4.0, 0.1);
}

TEST(Rng, CauchyMedianIsLocation) {
    Rng rng(5);
    std::vector<double> xs(20001);
    for (auto& x : xs) {
        x = rng.cauchy(0.5, 0.1);
    }
    std::nth_element(xs.begin(), xs.begin() + 10000, xs.end());
    EXPECT_NEAR(xs[10000], 0.5, 0.01);
}

TEST(Rng, Mix64SpreadsNearbyInputs) {
    EXPECT_NE(pcade::mix64(0), pcade::mix64(1));
    EXPECT_NE(pcade::mix64(1), pcade::mix64(2));
}
