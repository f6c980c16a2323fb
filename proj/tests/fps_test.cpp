#include <gtest/gtest.h>

#include <fracpow/error.hpp>
#include <fracpow/frac_series.hpp>

#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace fracpow;

namespace
{

FracSeries poly(const Rational &t, std::vector<std::pair<Rational, Rational>> terms)
{
    std::vector<Term> v;
    for (auto &[e, c] : terms) {
        v.push_back({e, c});
    }
    return FracSeries(t, std::move(v));
}

void expect_suite(const props::Outcome &r)
{
    EXPECT_GE(r.cases, 100);
    EXPECT_EQ(r.failures, 0) << "first failure: " << r.first_failure;
}

} // namespace

TEST(Fps, ConstructionNormalizes)
{
    const auto f = poly(Rational(2), {{Rational(3), Rational(1)}, {Rational(1, 2), Rational(2)}, {Rational(1, 2), Rational(-2)},
                                      {Rational(1), Rational(5)}});
    ASSERT_EQ(f.size(), 1u);
    EXPECT_EQ(f.coeff(Rational(1)), Rational(5));
    EXPECT_THROW(FracSeries(Rational(0)), domain_error);
    EXPECT_THROW(poly(Rational(1), {{Rational(-1), Rational(1)}}), domain_error);
    EXPECT_TRUE(poly(Rational(2), {{Rational(3, 4), Rational(1)}}).exponents_in_qb(2));
    EXPECT_FALSE(poly(Rational(2), {{Rational(1, 3), Rational(1)}}).exponents_in_qb(2));
}

TEST(Fps, AddExamples)
{
    const Rational t(2);
    const auto f = poly(t, {{0, 1}, {Rational(1, 2), 1}});
    const auto g = poly(t, {{0, 1}, {Rational(1, 2), -1}});
    EXPECT_EQ(f + g, FracSeries::constant(2, t));
    EXPECT_EQ(f + FracSeries(t), f);
    EXPECT_THROW(f + FracSeries(Rational(3)), usage_error);
}

TEST(Fps, MulExamples)
{
    const Rational t(10);
    std::vector<std::pair<Rational, Rational>> geo;
    for (int k = 0; k <= 10; ++k) {
        geo.push_back({k, 1});
    }
    EXPECT_EQ(poly(t, {{0, 1}, {1, -1}}) * poly(t, geo), FracSeries::constant(1, t));
    EXPECT_THROW(poly(t, geo) * FracSeries(Rational(2)), usage_error);
}

TEST(Fps, OrderAndValuation)
{
    const Rational t(3);
    EXPECT_TRUE(order(FracSeries(t)).is_infinite());
    EXPECT_EQ(order(poly(t, {{Rational(3, 4), 1}, {2, 1}})).value(), Rational(3, 4));
    EXPECT_EQ(order(FracSeries::constant(5, t)).value(), Rational(0));
    EXPECT_EQ(valuation(FracSeries(t)).exact(), Rational(0));
    EXPECT_EQ(valuation(poly(t, {{2, 7}})).exact(), Rational(1, 4));
    EXPECT_FALSE(valuation(poly(t, {{Rational(1, 2), 7}})).exact().has_value());
    EXPECT_NEAR(valuation(poly(t, {{Rational(1, 2), 7}})).to_double(), std::sqrt(0.5), 1e-15);
}

TEST(Fps, InvertExamples)
{
    const Rational t(6);
    const auto inv = invert(poly(t, {{0, 1}, {1, -1}}));
    for (int k = 0; k <= 6; ++k) {
        EXPECT_EQ(inv.coeff(k), Rational(1));
    }
    EXPECT_EQ(inv.size(), 7u);
    EXPECT_EQ(invert(FracSeries::constant(Rational(3, 5), t)), FracSeries::constant(Rational(5, 3), t));
    EXPECT_THROW(invert(poly(t, {{1, 1}})), not_invertible_error);
}

TEST(Fps, InvertMatchesGeometricSeries)
{
    props::SeriesGen gen(21);
    const Rational t(3);
    for (int i = 0; i < 100; ++i) {
        auto f = gen.series(t);
        if (f.constant_term().is_zero()) {
            f = f + FracSeries::constant(gen.coeff(), t);
        }
        const auto g = invert(f);
        EXPECT_EQ(props::to_map(g), oracle::geometric_inverse(props::to_map(f), t));
        EXPECT_EQ(f * g, FracSeries::constant(1, t));
    }
}

TEST(Fps, SubstitutePower)
{
    const auto f = poly(Rational(4), {{0, 1}, {1, 1}});
    EXPECT_EQ(substitute_power(f, 1), f);
    const auto h = substitute_power(f, Rational(1, 2));
    EXPECT_EQ(h, poly(Rational(2), {{0, 1}, {Rational(1, 2), 1}}));
    EXPECT_EQ(substitute_power(substitute_power(f, Rational(3, 7)), Rational(7, 3)), f);
    EXPECT_THROW(substitute_power(f, 0), domain_error);
}

TEST(Fps, Truncate)
{
    const auto f = poly(Rational(4), {{0, 1}, {1, 1}, {3, 2}});
    EXPECT_EQ(truncate(f, 2), poly(Rational(2), {{0, 1}, {1, 1}}));
    EXPECT_THROW(truncate(f, 5), usage_error);
}

TEST(Fps, Xderive)
{
    const Rational t(3);
    EXPECT_TRUE(xderive(FracSeries::constant(4, t)).is_zero());
    EXPECT_EQ(xderive(poly(t, {{Rational(3, 2), 1}})), poly(t, {{Rational(3, 2), Rational(3, 2)}}));
}

TEST(Fps, LogDerivativeOfRationalProduct)
{
    // G = (1 - x/2)^2 (1 + 3x)^-1; x G'/G = -sum_n (2 (1/2)^n - (-3)^n) x^n.
    const Rational t(8);
    const auto a = poly(t, {{0, 1}, {1, Rational(-1, 2)}});
    const auto b = poly(t, {{0, 1}, {1, 3}});
    const auto g = a * a * invert(b);
    const auto ld = log_derivative(g);
    for (int n = 1; n <= 8; ++n) {
        const Rational want = -(Rational(2) * Rational(1, 2).pow(n) - Rational(-3).pow(n));
        EXPECT_EQ(ld.coeff(n), want) << n;
    }
    EXPECT_TRUE(log_derivative(FracSeries::constant(1, t)).is_zero());
    EXPECT_THROW(log_derivative(poly(t, {{1, 1}})), not_invertible_error);
}

TEST(Fps, PowAlphaBinomial)
{
    const Rational t(12);
    const auto f = pow_alpha(poly(t, {{0, 1}, {1, 1}}), Rational(1, 2));
    const auto want = oracle::binomial_series(Rational(1, 2), 12);
    for (int k = 0; k <= 12; ++k) {
        EXPECT_EQ(f.coeff(k), want[static_cast<std::size_t>(k)]) << k;
    }
    EXPECT_EQ(f.coeff(2), Rational(-1, 8));
    const auto g = pow_alpha(poly(t, {{0, 1}, {Rational(1, 2), 2}}), Rational(-3, 4));
    const auto w2 = oracle::binomial_series(Rational(-3, 4), 24);
    for (int k = 0; k <= 24; ++k) {
        EXPECT_EQ(g.coeff(Rational(k, 2)), w2[static_cast<std::size_t>(k)] * Rational(2).pow(k));
    }
    EXPECT_THROW(pow_alpha(FracSeries::constant(2, t), 2), domain_error);
}

TEST(Fps, ExpLogIdentities)
{
    const Rational t(3);
    EXPECT_EQ(exp_series(FracSeries(t)), FracSeries::constant(1, t));
    EXPECT_THROW(exp_series(FracSeries::constant(1, t)), domain_error);
    EXPECT_THROW(log1p_series(FracSeries::constant(1, t)), domain_error);
    props::SeriesGen gen(8);
    for (int i = 0; i < 100; ++i) {
        const auto h = gen.series(t, 5, false, true);
        const auto one = FracSeries::constant(1, t);
        EXPECT_EQ(exp_series(log1p_series(h)), one + h);
        EXPECT_EQ(log1p_series(exp_series(h) - one), h);
        const Rational a(i % 7 - 3, 1 + i % 4);
        const Rational b(2, 3);
        EXPECT_EQ(pow_alpha(one + h, a) * pow_alpha(one + h, b), pow_alpha(one + h, a + b));
        EXPECT_EQ(pow_alpha(one + h, a), exp_series(scale(log1p_series(h), a)));
        EXPECT_EQ(pow_alpha(one + h, 3), (one + h) * (one + h) * (one + h));
        EXPECT_EQ(pow_alpha(one + h, -1), invert(one + h));
    }
}

TEST(Fps, ProductTruncated)
{
    const Rational t(20);
    EXPECT_EQ(product_truncated({}, t), FracSeries::constant(1, t));
    std::vector<FracSeries> factors;
    std::vector<std::int64_t> parts;
    for (std::int64_t p = 1; p <= 16; p *= 4) {
        factors.push_back(poly(t, {{0, 1}, {p, 1}}));
        parts.push_back(p);
    }
    const auto f = product_truncated(factors, t);
    const auto want = oracle::subset_sums(parts, 20);
    for (int n = 0; n <= 20; ++n) {
        const auto it = want.find(n);
        EXPECT_EQ(f.coeff(n), Rational(it == want.end() ? 0 : it->second)) << n;
    }
    EXPECT_THROW(product_truncated({FracSeries::constant(2, t)}, t), domain_error);
}

TEST(Fps, TauFromProduct)
{
    const Rational t(5);
    std::vector<FracSeries> factors;
    for (int n = 1; n <= 5; ++n) {
        factors.push_back(pow_alpha(poly(t, {{0, 1}, {n, -1}}), 24));
    }
    const auto f = product_truncated(factors, t);
    const auto tau = oracle::tau_by_expansion(5);
    for (int n = 1; n <= 5; ++n) {
        EXPECT_EQ(f.coeff(n - 1), Rational(tau[static_cast<std::size_t>(n - 1)])) << n;
    }
    EXPECT_EQ(tau[1], -24);
}

TEST(Fps, RecoverProductExponents)
{
    const Rational t(6);
    EXPECT_EQ(recover_product_exponents(poly(t, {{0, 1}, {1, -1}}), 6), (std::map<std::int64_t, Rational>{{1, 1}}));
    EXPECT_EQ(recover_product_exponents(invert(poly(t, {{0, 1}, {1, -1}})), 6),
              (std::map<std::int64_t, Rational>{{1, -1}}));
    EXPECT_THROW(recover_product_exponents(poly(t, {{0, 1}, {Rational(1, 2), 1}}), 6), domain_error);
    EXPECT_THROW(recover_product_exponents(poly(t, {{0, 2}}), 6), domain_error);
    EXPECT_THROW(recover_product_exponents(poly(t, {{0, 1}}), 7), usage_error);
    // Fractional terms above max_n are allowed.
    EXPECT_TRUE(recover_product_exponents(poly(t, {{0, 1}, {Rational(11, 2), 1}}), 5).empty());
}

TEST(Fps, OnemxProductSeries)
{
    const Rational t(10);
    const auto f = onemx_product_series({{1, 2}, {3, -1}}, t);
    const auto g = poly(t, {{0, 1}, {1, -1}}) * poly(t, {{0, 1}, {1, -1}}) * invert(poly(t, {{0, 1}, {3, -1}}));
    EXPECT_EQ(f, g);
}

TEST(FpsProperties, RingAxioms)
{
    expect_suite(props::ring_axioms(200, 1));
}

TEST(FpsProperties, OrderValuationLaws)
{
    expect_suite(props::order_valuation_laws(200, 2));
}

TEST(FpsProperties, DerivativeLaws)
{
    expect_suite(props::derivative_laws(100, 3));
}

TEST(FpsProperties, ExponentRecovery)
{
    expect_suite(props::exponent_recovery(100, 4));
}
