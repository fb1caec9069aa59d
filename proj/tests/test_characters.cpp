#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

#include "qchar/characters.hpp"

using namespace qchar;

namespace {

Laurent poly(int n, std::initializer_list<std::pair<Exponent, int>> terms) {
    Laurent p(n);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

Rational evaluate(const Laurent& p, const std::vector<Rational>& x) {
    Rational total = 0;
    for (const auto& [e, c] : p.terms()) {
        Rational m = Rational(c);
        for (std::size_t i = 0; i < e.size(); ++i) {
            const Rational base = e[i] >= 0 ? x[i] : 1 / x[i];
            for (int k = 0; k < std::abs(e[i]); ++k) m *= base;
        }
        total += m;
    }
    return total;
}

// The defining symmetrization evaluated at a point, as a rational number.
Rational schur_at(const Weight& mu, const std::vector<Rational>& x) {
    const int n = mu.rank();
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    Rational total = 0;
    do {
        Rational term = 1;
        for (int i = 0; i < n; ++i) {
            const Rational xi = x[w[i]];
            for (int k = 0; k < std::abs(mu[i]); ++k) term *= mu[i] > 0 ? xi : 1 / xi;
        }
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                if (mu[i] == 0 && mu[j] == 0) continue;
                const Rational a = x[w[i]], b = x[w[j]];
                term *= (a + b) / (a - b);
            }
        total += term;
    } while (std::next_permutation(w.begin(), w.end()));
    return total / Rational(stabilizer_order(mu));
}

bool symmetric(const Laurent& p, int n) {
    std::vector<int> w(static_cast<std::size_t>(n));
    std::iota(w.begin(), w.end(), 0);
    do {
        if (!(p.permuted(w) == p)) return false;
    } while (std::next_permutation(w.begin(), w.end()));
    return true;
}

Weight epsilon1(int n) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    e[0] = 1;
    return Weight(e);
}

}  // namespace

TEST(Laurent, ArithmeticAndText) {
    const Laurent x1 = Laurent::monomial({1, 0}), x2 = Laurent::monomial({0, 1});
    const Laurent s = x1 + x2;
    EXPECT_EQ(to_text(s * s), "x1^2 + 2*x1*x2 + x2^2");
    EXPECT_EQ(to_text(s - s), "0");
    EXPECT_EQ(to_text(Laurent::monomial({1, -1}, Integer(-3)) + Laurent::constant(2, 2)), "-3*x1*x2^-1 + 2");
    EXPECT_EQ((s * s).coefficient_sum(), 4);
    EXPECT_THROW(x1 + Laurent::monomial({1, 0, 0}), std::invalid_argument);
}

TEST(Laurent, ExactDivision) {
    const Laurent x1 = Laurent::monomial({1, 0}), x2 = Laurent::monomial({0, 1});
    const Laurent prod = (x1 - x2) * (x1 * x1 + x2 * Integer(3));
    EXPECT_EQ(prod.divided_by_difference(0, 1), x1 * x1 + x2 * Integer(3));
    EXPECT_THROW((x1 + x2).divided_by_difference(0, 1), std::logic_error);
    EXPECT_THROW((x1 * Integer(3)).divided_exactly(2), std::logic_error);
}

TEST(Laurent, JsonRoundTrip) {
    Laurent p(2);
    p.add_term({1, -1}, 2);
    p.add_term({0, 0}, Integer("123456789012345678901234567890"));
    const auto j = to_json(p);
    EXPECT_EQ(j.dump(), R"([[[1,-1],2],[[0,0],"123456789012345678901234567890"]])");
    EXPECT_EQ(laurent_from_json(nlohmann::json::parse(j.dump()), 2), p);
}

TEST(SchurP, SmallCases) {
    EXPECT_EQ(schur_p(Weight{1}), poly(1, {{{1}, 1}}));
    EXPECT_EQ(schur_p(Weight{1, 0}), poly(2, {{{1, 0}, 1}, {{0, 1}, 1}}));
    EXPECT_EQ(schur_p(Weight{1, -1}), poly(2, {{{1, -1}, 1}, {{0, 0}, 2}, {{-1, 1}, 1}}));
    EXPECT_TRUE(schur_p(Weight{2, -1, 2}).is_zero());
    EXPECT_TRUE(schur_p_symmetrize(Weight{2, -1, 2}).is_zero());
    EXPECT_EQ(schur_p(Weight{0, 0, 0}), Laurent::constant(3, 1));
}

TEST(SchurP, MatchesSymmetrizationAtPoints) {
    const std::vector<std::vector<Rational>> points = {
        {Rational(2), Rational(3), Rational(5), Rational(7)},
        {Rational(1, 2), Rational(-3), Rational(4, 3), Rational(11)},
    };
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : dominant_weights(n, 2))
            for (const auto& pt : points) {
                const std::vector<Rational> x(pt.begin(), pt.begin() + n);
                EXPECT_EQ(evaluate(schur_p(w), x), schur_at(w, x)) << to_string(w);
            }
}

TEST(SchurP, Symmetric) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : dominant_weights(n, 2)) EXPECT_TRUE(symmetric(schur_p(w), n)) << to_string(w);
}

TEST(SchurP, ConjugateSign) {
    const std::vector<Weight> samples = {{0, 1}, {-1, 0, 1}, {0, 2, 0, -1}, {1, -2, 0}, {-1, 1, 0, 0}};
    SchurCache cache;
    for (const auto& mu : samples) {
        const Laurent direct = schur_p(mu);
        Laurent want = schur_p(dominant_conjugate(mu)->weight);
        want *= Integer(schur_sign(mu));
        EXPECT_EQ(direct, want) << to_string(mu);
        EXPECT_EQ(cache.get(mu), direct) << to_string(mu);
    }
}

TEST(EulerCharacter, Examples) {
    EXPECT_EQ(euler_character(Weight{0, 0, 0}), Laurent::constant(3, 1));
    for (int n = 2; n <= 5; ++n) {
        const Laurent ch = euler_character(epsilon1(n));
        EXPECT_EQ(ch.size(), static_cast<std::size_t>(n));
        for (const auto& [e, c] : ch.terms()) EXPECT_EQ(c, 2);
        EXPECT_EQ(ch.coefficient_sum(), 2 * n);
    }
    const Laurent e = euler_character(Weight{1, -1});
    EXPECT_EQ(e, poly(2, {{{1, -1}, 2}, {{0, 0}, 4}, {{-1, 1}, 2}}));
    EXPECT_EQ(e.coefficient_sum(), 8);
    EXPECT_THROW(euler_character(Weight{0, 1}), std::invalid_argument);
}

TEST(EulerCharacter, NonnegativeIntegerCoefficients) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : dominant_weights(n, 2)) {
            const Laurent ch = euler_character(w);
            for (const auto& [e, c] : ch.terms()) EXPECT_GT(c, 0) << to_string(w);
        }
}

TEST(SimpleCharacter, Examples) {
    const Laurent ch = simple_character(Weight{1, -1});
    EXPECT_EQ(ch, poly(2, {{{1, -1}, 2}, {{0, 0}, 2}, {{-1, 1}, 2}}));
    EXPECT_EQ(ch.coefficient_sum(), 6);
    for (int n = 2; n <= 4; ++n) EXPECT_EQ(simple_character(epsilon1(n)), euler_character(epsilon1(n)));
    EXPECT_EQ(simple_character(Weight{3, 1}), euler_character(Weight{3, 1}));
}

TEST(SimpleCharacter, TypicalEqualsEuler) {
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : dominant_weights(n, 3))
            if (atypicality(w) == 0) {
                EXPECT_EQ(simple_character(w, CharRoute::Expansion), euler_character(w));
                EXPECT_EQ(simple_character(w, CharRoute::Closed), euler_character(w));
                EXPECT_EQ(simple_character(w, CharRoute::Cone), euler_character(w));
            }
}

TEST(SimpleCharacter, TopTermPositivityAndSymmetry) {
    SchurCache cache;
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : dominant_weights(n, 2)) {
            const Laurent ch = simple_character(w, CharRoute::Expansion, &cache);
            ASSERT_FALSE(ch.is_zero());
            EXPECT_EQ(ch.terms().begin()->first, w.entries()) << to_string(w);
            EXPECT_EQ(ch.terms().begin()->second, pow2(clifford_exponent(w))) << to_string(w);
            for (const auto& [e, c] : ch.terms()) EXPECT_GT(c, 0) << to_string(w);
            EXPECT_TRUE(symmetric(ch, n)) << to_string(w);
        }
}

TEST(SimpleCharacter, ClosedRouteWithoutZeroEntries) {
    SchurCache cache;
    for (int n = 2; n <= 4; ++n)
        for (const auto& w : dominant_weights(n, 3)) {
            if (stats(w).z > 0) continue;
            const Laurent ref = simple_character(w, CharRoute::Expansion, &cache);
            EXPECT_EQ(simple_character(w, CharRoute::Closed, &cache), ref) << to_string(w);
        }
}

TEST(Dimension, Anchors) {
    for (int n = 1; n <= 4; ++n) {
        const Weight zero(std::vector<int>(static_cast<std::size_t>(n), 0));
        EXPECT_EQ(dimension_closed(zero), 1);
        EXPECT_EQ(dimension_by_specialization(zero), 1);
    }
    for (int n = 2; n <= 5; ++n) {
        EXPECT_EQ(dimension_closed(epsilon1(n)), 2 * n);
        EXPECT_EQ(dimension_by_specialization(epsilon1(n)), 2 * n);
    }
    EXPECT_EQ(dimension_closed(Weight{1, -1}), 6);
    EXPECT_EQ(dimension_cone_value(Weight{1, -1}), 6);
    EXPECT_EQ(dimension_by_specialization(Weight{1, -1}), 6);
}

TEST(Dimension, RankCap) {
    EXPECT_THROW(dimension_closed(Weight(std::vector<int>(static_cast<std::size_t>(kDimensionRankCap + 1), 0))),
                 std::out_of_range);
}

TEST(Dimension, ClosedValueMatchesItsOwnCharacterRoute) {
    SchurCache cache;
    for (int n = 1; n <= 4; ++n)
        for (const auto& w : dominant_weights(n, 2)) {
            EXPECT_EQ(dimension_closed_value(w), Rational(simple_character(w, CharRoute::Closed, &cache).coefficient_sum()))
                << to_string(w);
            EXPECT_EQ(dimension_cone_value(w), Rational(simple_character_cone(w, &cache).coefficient_sum())) << to_string(w);
        }
}

TEST(Grothendieck, Examples) {
    EXPECT_TRUE(verify_grothendieck(Weight{3, 1}).ok);
    EXPECT_TRUE(verify_grothendieck(Weight{1, -1}).ok);
    EXPECT_TRUE(verify_grothendieck(Weight{2, 1, -1, -2}).ok);
}

TEST(Grothendieck, SweepRankThree) {
    SchurCache cache;
    for (int n = 1; n <= 3; ++n)
        for (const auto& w : dominant_weights(n, 3)) {
            const auto rep = verify_grothendieck(w, &cache);
            EXPECT_TRUE(rep.ok) << to_string(w) << " " << rep.mismatch;
        }
}
