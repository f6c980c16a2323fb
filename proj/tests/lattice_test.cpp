#include <gtest/gtest.h>

#include <fracpow/error.hpp>
#include <fracpow/lattice.hpp>

#include "support/oracles.hpp"

using namespace fracpow;

TEST(Lattice, EnumerateExamples)
{
    const LatticeSpec s(2, {Rational(3, 2)});
    const std::vector<Rational> want{Rational(0), Rational(1, 2), Rational(3, 4), Rational(1)};
    EXPECT_EQ(enumerate_below(s, Rational(1)), want);
    const LatticeSpec z(1, {});
    EXPECT_EQ(enumerate_below(z, Rational(3)), (std::vector<Rational>{0, 1, 2, 3}));
    EXPECT_EQ(enumerate_below(s, Rational(1, 3)), std::vector<Rational>{Rational(0)});
    EXPECT_THROW(enumerate_below(s, Rational(0)), domain_error);
}

TEST(Lattice, Contains)
{
    const LatticeSpec s(2, {Rational(3, 2)});
    EXPECT_TRUE(contains(s, Rational(3, 4)));
    EXPECT_FALSE(contains(s, Rational(1, 3)));
    EXPECT_TRUE(contains(s, Rational(0)));
    EXPECT_THROW(contains(s, Rational(-1)), domain_error);
}

TEST(Lattice, RejectsBadSpecs)
{
    EXPECT_THROW(LatticeSpec(0, {}), domain_error);
    EXPECT_THROW(LatticeSpec(2, {Rational(1)}), domain_error);
    EXPECT_THROW(LatticeSpec(2, {Rational(3, 2), Rational(3, 2)}), domain_error);
}

TEST(Lattice, MatchesBruteForce)
{
    const std::vector<LatticeSpec> specs{
        {2, {Rational(3, 2)}},
        {3, {Rational(4, 3), Rational(5, 3)}},
        {4, {Rational(6, 4), Rational(7, 4)}},
        {2, {Rational(2), Rational(4)}},
    };
    for (const auto &s : specs) {
        for (const Rational bound : {Rational(1), Rational(5, 2), Rational(4)}) {
            const auto got = enumerate_below(s, bound);
            const auto want = oracle::lattice_points(s.b, s.thetas, bound);
            EXPECT_EQ(std::set<Rational>(got.begin(), got.end()), want);
            EXPECT_EQ(got.size(), want.size());
        }
    }
}

TEST(Lattice, StructuralProperties)
{
    const LatticeSpec s(3, {Rational(5, 3), Rational(2)});
    const Rational t(6);
    const auto pts = enumerate_below(s, t);
    const std::set<Rational> set(pts.begin(), pts.end());
    EXPECT_TRUE(std::is_sorted(pts.begin(), pts.end()));
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i; j < pts.size(); ++j) {
            const Rational sum = pts[i] + pts[j];
            if (sum > t) {
                break;
            }
            EXPECT_TRUE(set.count(sum)) << sum;
        }
        for (const auto &th : s.thetas) {
            if (pts[i] * th <= t) {
                EXPECT_TRUE(set.count(pts[i] * th));
            }
        }
    }
    for (int n = 0; n <= 6; ++n) {
        EXPECT_TRUE(set.count(Rational(n)));
    }
    std::size_t prev = 0;
    for (int k = 1; k <= 12; ++k) {
        const auto n = enumerate_below(s, Rational(k, 2)).size();
        EXPECT_GE(n, prev);
        prev = n;
    }
}
