#ifndef FRACPOW_POLYNOMIAL_HPP
#define FRACPOW_POLYNOMIAL_HPP

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <fracpow/frac_series.hpp>
#include <fracpow/rational.hpp>

namespace fracpow
{

// Dense polynomial with rational coefficients; index = degree. Trailing zeros
// are trimmed, so the zero polynomial has no coefficients.
class IntPolynomial
{
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Rational> coeffs);
    static IntPolynomial from_ints(const std::vector<long> &coeffs);
    static IntPolynomial monomial(const Rational &c, std::size_t degree);

    // "1 - x + x^2", "2 + 4*x", "1/2 + 3/4*x^3"; whitespace is ignored.
    static IntPolynomial parse(std::string_view text);
    std::string to_string() const;

    const std::vector<Rational> &coeffs() const noexcept
    {
        return coeffs_;
    }
    bool is_zero() const noexcept
    {
        return coeffs_.empty();
    }
    // -1 for the zero polynomial.
    long degree() const noexcept
    {
        return static_cast<long>(coeffs_.size()) - 1;
    }
    Rational coeff(std::size_t i) const;
    bool integral() const;
    Rational eval(const Rational &x) const;

    // p(x) -> p(x^a).
    IntPolynomial substitute(std::size_t a) const;
    FracSeries to_series(const Rational &cutoff) const;

    friend IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b);
    friend IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b);
    friend bool operator==(const IntPolynomial &, const IntPolynomial &) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// Quotient and remainder; throws domain_error on a zero divisor.
std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial &a, const IntPolynomial &b);

// Monic-normalized greatest common divisor (zero when both inputs are zero).
IntPolynomial gcd(IntPolynomial a, IntPolynomial b);

// The c > 0 with p = c * (primitive integer polynomial).
Rational content(const IntPolynomial &p);

} // namespace fracpow

#endif
