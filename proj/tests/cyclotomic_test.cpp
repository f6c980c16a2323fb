#include <random>

#include <gtest/gtest.h>

#include <fracpow/cyclotomic.hpp>
#include <fracpow/error.hpp>
#include <fracpow/number_theory.hpp>

#include "support/oracles.hpp"
#include "support/properties.hpp"

using namespace fracpow;

namespace
{

using Map = std::map<std::int64_t, Rational>;

CycloProduct phi(Map m)
{
    return CycloProduct(CycloProduct::Basis::phi, std::move(m));
}

IntPolynomial from_z(const oracle::ZPoly &p)
{
    std::vector<Rational> v;
    for (const auto &c : p) {
        v.emplace_back(c);
    }
    return IntPolynomial(std::move(v));
}

} // namespace

TEST(Polynomial, ParseAndPrint)
{
    EXPECT_EQ(IntPolynomial::parse("1 - x + x^2"), IntPolynomial::from_ints({1, -1, 1}));
    EXPECT_EQ(IntPolynomial::parse("2 + 4*x"), IntPolynomial::from_ints({2, 4}));
    EXPECT_EQ(IntPolynomial::parse("1/2 + 3/4*x").coeff(1), Rational(3, 4));
    EXPECT_EQ(IntPolynomial::parse("-x^3 + 1").to_string(), "1 - x^3");
    EXPECT_EQ(IntPolynomial::parse("x").to_string(), "x");
    EXPECT_EQ(IntPolynomial::parse("1 - 2*x + 1/3*x^4").to_string(), "1 - 2*x + 1/3*x^4");
    EXPECT_EQ(IntPolynomial::parse("x - x").to_string(), "0");
    for (const char *bad : {"", "1 +", "x^", "2**x", "x^a", "*x"}) {
        EXPECT_THROW(IntPolynomial::parse(bad), usage_error) << bad;
    }
}

TEST(Polynomial, DivmodAndGcd)
{
    const auto a = IntPolynomial::from_ints({1, 0, 0, -1});
    const auto b = IntPolynomial::from_ints({1, -1});
    auto [q, r] = divmod(a, b);
    EXPECT_EQ(q, IntPolynomial::from_ints({1, 1, 1}));
    EXPECT_TRUE(r.is_zero());
    EXPECT_EQ(gcd(a, IntPolynomial::from_ints({1, 0, -1})), IntPolynomial::from_ints({-1, 1}));
    EXPECT_THROW(divmod(a, IntPolynomial()), domain_error);
}

TEST(Cyclotomic, Content)
{
    EXPECT_EQ(content(IntPolynomial::parse("2 + 4*x")), Rational(2));
    EXPECT_EQ(content(IntPolynomial::parse("1/2 + 3/4*x")), Rational(1, 4));
    EXPECT_EQ(content(IntPolynomial::parse("-6 - 9*x")), Rational(3));
    EXPECT_THROW(content(IntPolynomial()), domain_error);
}

TEST(Cyclotomic, GaussLemma)
{
    const auto r = props::gauss_content(200, 9);
    EXPECT_GE(r.cases, 100);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
}

TEST(Cyclotomic, PhiExamples)
{
    EXPECT_EQ(cyclotomic_poly(1).to_string(), "1 - x");
    EXPECT_EQ(cyclotomic_poly(2).to_string(), "1 + x");
    EXPECT_EQ(cyclotomic_poly(6).to_string(), "1 - x + x^2");
    EXPECT_THROW(cyclotomic_poly(0), domain_error);
}

TEST(Cyclotomic, PhiMatchesDivisionOracle)
{
    for (std::int64_t n = 1; n <= 200; ++n) {
        const auto p = cyclotomic_poly(n);
        EXPECT_EQ(p, from_z(oracle::phi_by_division(n))) << n;
        EXPECT_EQ(p.degree(), oracle::phi_by_count(n));
        EXPECT_TRUE(p.coeff(0).is_one());
        EXPECT_EQ(content(p), Rational(1));
    }
}

TEST(Cyclotomic, OnemxnFactor)
{
    EXPECT_EQ(onemxn_factor(1), phi({{1, 1}}));
    EXPECT_EQ(onemxn_factor(6), phi({{1, 1}, {2, 1}, {3, 1}, {6, 1}}));
    for (std::int64_t n = 1; n <= 60; ++n) {
        oracle::ZPoly prod{1};
        for (const auto &[d, e] : onemxn_factor(n).exps) {
            prod = oracle::poly_mul(prod, oracle::phi_by_division(d));
        }
        oracle::ZPoly want(static_cast<std::size_t>(n) + 1, 0);
        want[0] = 1;
        want[static_cast<std::size_t>(n)] = -1;
        EXPECT_EQ(prod, want) << n;
        EXPECT_EQ(expand_polynomial(onemxn_factor(n)), from_z(want));
    }
}

TEST(Cyclotomic, PhiAsOnemx)
{
    EXPECT_EQ(phi_as_onemx(1), CycloProduct(CycloProduct::Basis::onemx, {{1, 1}}));
    EXPECT_EQ(phi_as_onemx(4), CycloProduct(CycloProduct::Basis::onemx, {{4, 1}, {2, -1}}));
    for (std::int64_t n = 1; n <= 30; ++n) {
        const Rational t(40);
        EXPECT_EQ(expand_series(phi_as_onemx(n), t), from_z(oracle::phi_by_division(n)).to_series(t)) << n;
    }
}

TEST(Cyclotomic, ExpandPhiPower)
{
    EXPECT_EQ(expand_phi_power(1, 2), phi({{1, 1}, {2, 1}}));
    EXPECT_EQ(expand_phi_power(2, 2), phi({{4, 1}}));
    EXPECT_EQ(expand_phi_power(6, 4), phi({{24, 1}}));
    EXPECT_EQ(expand_phi_power(3, 2), phi({{3, 1}, {6, 1}}));
}

TEST(Cyclotomic, PhiPowerReassembly)
{
    const auto r = props::phi_power_reassembly(30, 50);
    EXPECT_EQ(r.failures, 0) << r.first_failure;
    EXPECT_GE(r.cases, 2 * 900 + 2500);
}

TEST(Cyclotomic, SubstituteCyclo)
{
    const auto g = phi({{1, 2}, {3, -1}, {4, Rational(1, 2)}});
    EXPECT_EQ(substitute_cyclo(g, 1), g);
    EXPECT_EQ(substitute_cyclo(phi({{6, 1}}), 4), expand_phi_power(6, 4));
    std::mt19937_64 rng(4);
    std::uniform_int_distribution<int> dpick(1, 12);
    std::uniform_int_distribution<int> epick(-2, 2);
    const Rational t(40);
    for (int trial = 0; trial < 30; ++trial) {
        Map m;
        for (int k = 0; k < 3; ++k) {
            m[dpick(rng)] = Rational(epick(rng));
        }
        const auto gg = phi(m);
        for (std::int64_t a = 1; a <= 6; ++a) {
            const auto sub = substitute_cyclo(gg, a);
            // Exponent at f equals h_[f/a] (bracket rule).
            for (const auto &[f, v] : sub.exps) {
                EXPECT_EQ(v, gg.at(bracket(Rational(f, a)).get_si()));
            }
            const auto lhs = expand_series(sub, t);
            const auto rhs = substitute_power(expand_series(gg, t / Rational(a)), Rational(a));
            EXPECT_EQ(lhs, rhs);
        }
    }
}

TEST(Cyclotomic, ApplyMform)
{
    const MSpec m({{2, 1}, {3, 1}});
    EXPECT_TRUE(apply_mform(CycloProduct(), m).empty());
    const auto g = phi({{1, 1}});
    const auto out = apply_mform(g, m);
    const Rational t(30);
    const auto lhs = expand_series(out, t);
    const auto rhs = substitute_power(expand_series(g, t / 2), 2) * substitute_power(expand_series(g, t / 3), 3);
    EXPECT_EQ(lhs, rhs);
    const MSpec m2({{2, 2}, {4, 1}, {6, 3}});
    const auto g2 = phi({{1, -1}, {2, 3}, {3, Rational(1, 2)}, {6, 1}});
    const auto out2 = apply_mform(g2, m2);
    for (std::int64_t d = 1; d <= 200; ++d) {
        Rational want;
        for (const auto &pr : m2.pairs()) {
            want += Rational(pr.e) * g2.at(bracket(Rational(d, pr.b)).get_si());
        }
        EXPECT_EQ(out2.at(d), want) << d;
    }
}

TEST(Cyclotomic, BasisConversion)
{
    const auto g = phi({{1, -1}, {4, 2}, {6, Rational(1, 3)}});
    EXPECT_EQ(to_phi(to_onemx(g)), g);
    EXPECT_EQ(expand_polynomial(phi({{2, 1}, {3, 2}})),
              IntPolynomial::from_ints({1, 1}) * IntPolynomial::from_ints({1, 1, 1}) * IntPolynomial::from_ints({1, 1, 1}));
    EXPECT_THROW(expand_polynomial(g), domain_error);
}

TEST(Cyclotomic, NPrimePart)
{
    const MSpec m23({{2, 1}, {3, 1}});
    EXPECT_EQ(nprime_cyclotomic_part(IntPolynomial::from_ints({1}), m23, true), phi({{1, -1}}));
    EXPECT_EQ(nprime_cyclotomic_part(IntPolynomial::from_ints({1, 1}), m23, true), phi({{1, -1}, {2, 1}}));
    const auto fac = nprime_cyclotomic_factorization(IntPolynomial::from_ints({1, 1, 1}), m23, true);
    EXPECT_EQ(fac.part, phi({{1, -1}, {3, 1}}));
    EXPECT_EQ(fac.residual, IntPolynomial::from_ints({1}));
    // Phi_5 is not N'-cyclotomic for b = (2, 3) and stays in the residual.
    const auto p5 = cyclotomic_poly(5) * cyclotomic_poly(4) * cyclotomic_poly(4) * IntPolynomial::from_ints({1, 2});
    const auto f5 = nprime_cyclotomic_factorization(p5, m23, false);
    EXPECT_EQ(f5.part, phi({{4, 2}}));
    EXPECT_EQ(f5.residual, cyclotomic_poly(5) * IntPolynomial::from_ints({1, 2}));
    EXPECT_THROW(nprime_cyclotomic_part(IntPolynomial::from_ints({2, 1}), m23, true), precondition_error);
    EXPECT_THROW(nprime_cyclotomic_part(IntPolynomial::from_ints({1, -1}), m23, true), precondition_error);
    EXPECT_THROW(nprime_cyclotomic_part(IntPolynomial::parse("1 + 1/2*x"), m23, true), precondition_error);
}

TEST(Cyclotomic, NPrimePartReassembles)
{
    std::mt19937_64 rng(6);
    const MSpec m({{4, 1}, {6, 1}, {9, 2}});
    std::uniform_int_distribution<int> dpick(2, 40);
    std::uniform_int_distribution<int> cpick(-3, 3);
    for (int trial = 0; trial < 40; ++trial) {
        IntPolynomial p = IntPolynomial::from_ints({1});
        for (int k = 0; k < 3; ++k) {
            p = p * cyclotomic_poly(dpick(rng));
        }
        p = p * IntPolynomial::from_ints({1, cpick(rng), cpick(rng)});
        if (p.eval(Rational(1)).is_zero()) {
            continue;
        }
        const auto fac = nprime_cyclotomic_factorization(p, m, false);
        EXPECT_EQ(expand_polynomial(fac.part) * fac.residual, p);
        for (std::int64_t d = 1; d <= 2 * p.degree() * p.degree() + 2; ++d) {
            if (in_nprime(d, m) && euler_phi(d) <= p.degree()) {
                EXPECT_EQ(gcd(fac.residual, cyclotomic_poly(d)).degree(), 0) << d;
            }
        }
    }
}
