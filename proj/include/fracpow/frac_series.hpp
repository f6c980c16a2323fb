#ifndef FRACPOW_FRAC_SERIES_HPP
#define FRACPOW_FRAC_SERIES_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include <fracpow/rational.hpp>

namespace fracpow
{

// One x^exponent * coeff term of a FracSeries.
struct Term {
    Rational exponent;
    Rational coeff;
    friend bool operator==(const Term &, const Term &) = default;
};

// Truncated fractional power series sum c_lambda x^lambda, lambda in [0, T].
//
// Terms are kept sorted by exponent with nonzero coefficients only. A series
// is understood to be exact on every exponent <= cutoff; binary operations
// require equal cutoffs and throw usage_error otherwise.
class FracSeries
{
public:
    // The zero series at cutoff T.
    explicit FracSeries(Rational cutoff);

    // Terms above the cutoff are dropped, duplicate exponents summed and zero
    // coefficients removed.
    FracSeries(Rational cutoff, std::vector<Term> terms);
    FracSeries(Rational cutoff, const std::map<Rational, Rational> &terms);

    static FracSeries constant(const Rational &c, const Rational &cutoff);
    static FracSeries monomial(const Rational &c, const Rational &exponent, const Rational &cutoff);

    const Rational &cutoff() const noexcept
    {
        return cutoff_;
    }
    const std::vector<Term> &terms() const noexcept
    {
        return terms_;
    }
    std::size_t size() const noexcept
    {
        return terms_.size();
    }
    bool is_zero() const noexcept
    {
        return terms_.empty();
    }
    Rational coeff(const Rational &exponent) const;
    Rational constant_term() const;

    // Every exponent has a denominator whose primes divide b.
    bool exponents_in_qb(std::int64_t b) const;

    // Trusts the caller: terms strictly ascending, coefficients nonzero and
    // exponents within [0, cutoff].
    static FracSeries from_sorted(Rational cutoff, std::vector<Term> terms);

    friend bool operator==(const FracSeries &, const FracSeries &) = default;

private:
    Rational cutoff_;
    std::vector<Term> terms_;
};

// Least exponent with a nonzero coefficient, or infinity for a zero truncation.
class SeriesOrder
{
public:
    SeriesOrder() = default;
    explicit SeriesOrder(Rational v) : value_(std::move(v)) {}
    static SeriesOrder infinity()
    {
        return SeriesOrder();
    }

    bool is_infinite() const noexcept
    {
        return !value_.has_value();
    }
    const Rational &value() const;

    friend bool operator==(const SeriesOrder &, const SeriesOrder &) = default;
    friend std::strong_ordering operator<=>(const SeriesOrder &a, const SeriesOrder &b);
    friend SeriesOrder operator+(const SeriesOrder &a, const SeriesOrder &b);

private:
    std::optional<Rational> value_;
};

// |f| = beta^ord(f) with beta = 1/2. Fractional orders give irrational
// values, so the order is kept and the value is exposed exactly only when it
// is rational.
class Valuation
{
public:
    static Valuation zero()
    {
        return Valuation();
    }
    explicit Valuation(Rational ord) : ord_(std::move(ord)) {}

    bool is_zero() const noexcept
    {
        return !ord_.has_value();
    }
    const Rational &order() const;

    // beta^ord when ord is an integer; 0 for the zero valuation.
    std::optional<Rational> exact() const;
    double to_double() const;

    friend bool operator==(const Valuation &, const Valuation &) = default;
    friend std::strong_ordering operator<=>(const Valuation &a, const Valuation &b);
    friend Valuation operator*(const Valuation &a, const Valuation &b);

private:
    Valuation() = default;
    std::optional<Rational> ord_;
};

inline const Rational k_valuation_beta{1, 2};

FracSeries add(const FracSeries &f, const FracSeries &g);
FracSeries sub(const FracSeries &f, const FracSeries &g);
FracSeries negate(const FracSeries &f);
FracSeries scale(const FracSeries &f, const Rational &c);
FracSeries mul(const FracSeries &f, const FracSeries &g);

FracSeries operator+(const FracSeries &f, const FracSeries &g);
FracSeries operator-(const FracSeries &f, const FracSeries &g);
FracSeries operator*(const FracSeries &f, const FracSeries &g);

SeriesOrder order(const FracSeries &f);
Valuation valuation(const FracSeries &f);

// Requires f(0) != 0; throws not_invertible_error otherwise.
FracSeries invert(const FracSeries &f);

// lambda -> rho * lambda; cutoff becomes rho * T.
FracSeries substitute_power(const FracSeries &f, const Rational &rho);

// Drops terms above the new cutoff, which may not exceed the current one.
FracSeries truncate(const FracSeries &f, const Rational &cutoff);

// x f'(x): lambda c_lambda at each exponent.
FracSeries xderive(const FracSeries &f);

// x f' / f; requires f(0) != 0.
FracSeries log_derivative(const FracSeries &f);

// exp(f) and log(1 + f) need ord f > 0; pow_alpha(f, a) = f^a needs f(0) = 1.
FracSeries exp_series(const FracSeries &f);
FracSeries log1p_series(const FracSeries &f);
FracSeries pow_alpha(const FracSeries &f, const Rational &alpha);

// Product of factors 1 + h_n, each with ord h_n > 0 and the same cutoff.
// `cutoff` gives the result's cutoff for an empty factor list.
FracSeries product_truncated(const std::vector<FracSeries> &factors, const Rational &cutoff);

// alpha_n with f = prod_{n <= max_n} (1 - x^n)^{alpha_n} up to max_n.
// Requires f(0) = 1, max_n <= cutoff and no fractional exponents <= max_n.
std::map<std::int64_t, Rational> recover_product_exponents(const FracSeries &f, std::int64_t max_n);

// prod_d (1 - x^d)^{exps[d]} expanded to the given cutoff.
FracSeries onemx_product_series(const std::map<std::int64_t, Rational> &exps, const Rational &cutoff);

} // namespace fracpow

#endif
