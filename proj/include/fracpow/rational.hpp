#ifndef FRACPOW_RATIONAL_HPP
#define FRACPOW_RATIONAL_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fracpow
{

using BigInt = mpz_class;

// Exact rational number, always in lowest terms with a positive denominator.
//
// Values whose numerator and denominator both fit in (-2^63, 2^63) are kept
// inline as a pair of int64; anything larger lives in a shared, immutable GMP
// rational. The representation is canonical: a value that fits inline is never
// stored in the big form, so equality and hashing can compare representations
// directly.
class Rational
{
public:
    Rational() noexcept = default;
    Rational(int n) noexcept : num_(n) {}
    Rational(long n);
    Rational(long long n);
    Rational(std::int64_t num, std::int64_t den);
    explicit Rational(const BigInt &n);
    Rational(const BigInt &num, const BigInt &den);
    explicit Rational(const mpq_class &q);

    // Accepts "a", "-a", "a/b" with optional surrounding whitespace.
    static Rational parse(std::string_view text);

    // "num/den", with "/den" omitted when den == 1.
    std::string to_string() const;

    bool is_small() const noexcept
    {
        return !big_;
    }
    int sign() const noexcept;
    bool is_zero() const noexcept
    {
        return !big_ && num_ == 0;
    }
    bool is_one() const noexcept
    {
        return !big_ && num_ == 1 && den_ == 1;
    }
    bool is_integer() const noexcept;
    bool is_positive() const noexcept
    {
        return sign() > 0;
    }

    BigInt numerator() const;
    BigInt denominator() const;
    mpq_class to_mpq() const;
    double to_double() const;

    // Numerator/denominator when the value is inline.
    std::optional<std::int64_t> small_numerator() const noexcept
    {
        return big_ ? std::nullopt : std::optional<std::int64_t>(num_);
    }
    std::optional<std::int64_t> small_denominator() const noexcept
    {
        return big_ ? std::nullopt : std::optional<std::int64_t>(den_);
    }
    // The value as int64, if it is an integer in range.
    std::optional<std::int64_t> to_int64() const noexcept;

    Rational abs() const;
    Rational inverse() const;
    Rational pow(std::int64_t k) const;
    BigInt floor() const;
    BigInt ceil() const;

    Rational operator-() const;
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(const Rational &a, const Rational &b);
    friend Rational operator-(const Rational &a, const Rational &b);
    friend Rational operator*(const Rational &a, const Rational &b);
    friend Rational operator/(const Rational &a, const Rational &b);

    friend bool operator==(const Rational &a, const Rational &b) noexcept;
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b);

    std::size_t hash() const noexcept;

private:
    static Rational from_mpq(mpq_class q);
    void assign_canonical(mpq_class q);

    std::int64_t num_ = 0;
    std::int64_t den_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

std::ostream &operator<<(std::ostream &os, const Rational &q);

struct RationalHash {
    std::size_t operator()(const Rational &q) const noexcept
    {
        return q.hash();
    }
};

} // namespace fracpow

template <>
struct std::hash<fracpow::Rational> {
    std::size_t operator()(const fracpow::Rational &q) const noexcept
    {
        return q.hash();
    }
};

#endif
