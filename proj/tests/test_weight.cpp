#include <gtest/gtest.h>

#include <algorithm>

#include "qchar/weight.hpp"

using namespace qchar;

namespace {

const Weight kGolden{7, 5, 4, 2, 1, 0, 0, 0, 0, 0, -1, -2, -4, -7, -8, -10};

}  // namespace

TEST(Stats, GoldenWeight) {
    const auto s = stats(kGolden);
    EXPECT_EQ(s.z, 5);
    EXPECT_EQ(s.zbar, 1);
    EXPECT_EQ(s.h, 11);
    EXPECT_TRUE(s.dominant);
    EXPECT_TRUE(s.regular);
    EXPECT_EQ(s.type, ModuleType::Q);
}

TEST(Stats, ZeroWeight) {
    for (int n = 1; n <= 5; ++n) {
        const auto s = stats(Weight(std::vector<int>(static_cast<std::size_t>(n), 0)));
        EXPECT_EQ(s.z, n);
        EXPECT_EQ(s.h, 0);
        EXPECT_TRUE(s.dominant);
        EXPECT_TRUE(s.regular);
        EXPECT_EQ(s.type, ModuleType::M);
    }
}

TEST(Stats, RepeatedNonzeroIsNotDominant) { EXPECT_FALSE(stats(Weight{1, 1}).dominant); }

TEST(Stats, HeightPlusZerosIsRank) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : dominant_weights(n, 3)) EXPECT_EQ(stats(w).h + stats(w).z, n);
}

TEST(Stats, TypeTogglesWithNewNonzeroEntry) {
    for (const auto& w : dominant_weights(3, 2)) {
        auto e = w.entries();
        e.insert(e.begin(), 9);
        EXPECT_NE(stats(w).type, stats(Weight(e)).type);
    }
}

TEST(DominantConjugate, Examples) {
    EXPECT_EQ(dominant_conjugate(Weight{0, 1})->weight, (Weight{1, 0}));
    EXPECT_FALSE(dominant_conjugate(Weight{2, -1, 2}).has_value());
    EXPECT_EQ(dominant_conjugate(Weight{-3, 5, 0, 3})->weight, (Weight{5, 3, 0, -3}));
}

TEST(DominantConjugate, IsSortedPermutation) {
    const std::vector<Weight> samples = {{0, 1}, {-3, 5, 0, 3}, {0, -2, 0, 2, 1}, {4, -4, 0, 0, 1, -1}};
    for (const auto& w : samples) {
        const auto c = dominant_conjugate(w);
        ASSERT_TRUE(c.has_value());
        EXPECT_TRUE(is_dominant(c->weight));
        auto a = w.entries(), b = c->weight.entries();
        std::sort(a.begin(), a.end());
        std::sort(b.begin(), b.end());
        EXPECT_EQ(a, b);
        for (int k = 0; k < w.rank(); ++k) EXPECT_EQ(c->weight[k], w[c->source[k]]);
    }
}

TEST(AtypicalData, GoldenRoots) {
    const auto a = atypical_data(kGolden, true);
    const std::vector<AtypicalRoot> want = {{6, 8}, {5, 9}, {4, 10}, {3, 11}, {2, 12}, {0, 13}};
    EXPECT_EQ(a.roots, want);
    EXPECT_EQ(a.entries, (std::vector<int>{0, 0, 1, 2, 4, 7}));
    EXPECT_EQ(a.typical_tuple, (std::vector<int>{5, 0, -8, -10}));
}

TEST(AtypicalData, SmallCases) {
    EXPECT_EQ(atypical_data(Weight{3, 1}).degree(), 0);
    const auto a = atypical_data(Weight{1, -1});
    ASSERT_EQ(a.degree(), 1);
    EXPECT_EQ(a.roots[0], (AtypicalRoot{0, 1}));
    EXPECT_EQ(a.atypical_tuple(), std::vector<int>{1});
}

TEST(AtypicalData, MiddleZeroStaysUnpaired) {
    const auto a = atypical_data(Weight{0, 0, 0}, true);
    ASSERT_EQ(a.degree(), 1);
    EXPECT_EQ(a.roots[0], (AtypicalRoot{0, 2}));
}

TEST(AtypicalData, RootsAreNested) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : dominant_weights(n, 3)) {
            const auto a = atypical_data(w, true);
            for (int p = 0; p + 1 < a.degree(); ++p) {
                EXPECT_LT(a.roots[p + 1].m, a.roots[p].m);
                EXPECT_GT(a.roots[p + 1].n, a.roots[p].n);
            }
            for (int p = 0; p < a.degree(); ++p) EXPECT_LT(a.roots[p].m, a.roots[p].n);
        }
}

TEST(AtypicalData, FrameReconstructsWeight) {
    for (int n = 1; n <= 6; ++n)
        for (const auto& w : dominant_weights(n, 3)) {
            const auto a = atypical_data(w, true);
            EXPECT_EQ(frame_weight(a.frame, a.roots, a.entries), w);
        }
}

TEST(AtypicalData, VanishingWeightThrows) { EXPECT_THROW(atypical_data(Weight{2, -1, 2}), std::invalid_argument); }

TEST(CompareLex, Examples) {
    EXPECT_TRUE(compare_lex(Weight{2, 0}, Weight{1, 1}) < 0);
    EXPECT_TRUE(compare_lex(Weight{1, -1}, Weight{1, -1}) == 0);
    EXPECT_TRUE(compare_lex(Weight{1, 1, 0}, Weight{1, 0, -1}) < 0);
}

TEST(CompareLex, StrictTotalOrder) {
    const auto ws = dominant_weights(4, 2);
    for (const auto& a : ws)
        for (const auto& b : ws) {
            const auto ab = compare_lex(a, b);
            EXPECT_EQ(ab == 0, a == b);
            EXPECT_EQ(ab < 0, compare_lex(b, a) > 0);
        }
}

TEST(PartialOrder, Examples) {
    EXPECT_TRUE(partial_order_atypical(Weight{1, -1}, Weight{1, -1}));
    EXPECT_TRUE(partial_order_atypical(Weight{0, 0}, Weight{1, -1}));
    EXPECT_FALSE(partial_order_atypical(Weight{1, -1}, Weight{0, 0}));
    EXPECT_TRUE(partial_order_atypical(Weight{2, 1, -1, -2}, Weight{3, 1, -1, -3}));
    EXPECT_FALSE(partial_order_atypical(Weight{3, 1, -1, -3}, Weight{2, 1, -1, -2}));
}

TEST(PartialOrder, IncomparableTuples) {
    // tuples (2,1) and (1,2) in the frame of (0,0,0,0)
    const Weight a{2, 1, -1, -2};
    const Weight b = frame_weight(atypical_data(a).frame, atypical_data(a).roots, {2, 1});
    EXPECT_FALSE(partial_order_atypical(a, b));
    EXPECT_FALSE(partial_order_atypical(b, a));
}

TEST(PartialOrder, DifferentFramesThrow) { EXPECT_THROW(partial_order_atypical(Weight{3, 1}, Weight{1, -1}), std::invalid_argument); }

TEST(RelativeLevel, Examples) {
    EXPECT_EQ(relative_level(kGolden, kGolden), 0);
    EXPECT_EQ(relative_level(Weight{1, -1}, Weight{0, 0}), 1);
    EXPECT_EQ(relative_level(Weight{3, 1, -1, -3}, Weight{2, 1, -1, -2}), 1);
}

TEST(ParseWeight, TextFormat) {
    EXPECT_EQ(parse_weight("7,5,4,2,1,0,0,0,0,0,-1,-2,-4,-7,-8,-10"), kGolden);
    EXPECT_EQ(parse_weight(" 1, -1 "), (Weight{1, -1}));
    EXPECT_THROW(parse_weight(""), std::invalid_argument);
    EXPECT_THROW(parse_weight("1,,2"), std::invalid_argument);
    EXPECT_THROW(parse_weight("1,x"), std::invalid_argument);
    EXPECT_EQ(to_string(kGolden), "7,5,4,2,1,0,0,0,0,0,-1,-2,-4,-7,-8,-10");
}

TEST(DominantWeights, CountsMatchDirectFilter) {
    for (int n = 1; n <= 4; ++n) {
        std::size_t count = 0;
        std::vector<int> e(static_cast<std::size_t>(n), -2);
        while (true) {
            if (is_dominant(Weight(e))) ++count;
            int k = 0;
            while (k < n && e[k] == 2) e[k++] = -2;
            if (k == n) break;
            ++e[k];
        }
        EXPECT_EQ(dominant_weights(n, 2).size(), count);
    }
}
