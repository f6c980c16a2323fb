#include <fracpow/rational.hpp>

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <ostream>

#include <fracpow/error.hpp>

namespace fracpow
{

namespace
{

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t k_min_small = std::numeric_limits<std::int64_t>::min() + 1;

bool fits_small(i128 v) noexcept
{
    return v >= k_min_small && v <= std::numeric_limits<std::int64_t>::max();
}

std::uint64_t uabs(std::int64_t v) noexcept
{
    return v < 0 ? static_cast<std::uint64_t>(-(v + 1)) + 1u : static_cast<std::uint64_t>(v);
}

std::uint64_t gcd_u64(std::uint64_t a, std::uint64_t b) noexcept
{
    return std::gcd(a, b);
}

u128 gcd_u128(u128 a, u128 b) noexcept
{
    while (b != 0) {
        u128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

bool mpz_fits_small(const mpz_class &z) noexcept
{
    return mpz_fits_slong_p(z.get_mpz_t()) != 0 && z != std::numeric_limits<long>::min();
}

} // namespace

Rational::Rational(long n)
{
    if (n == std::numeric_limits<long>::min()) {
        big_ = std::make_shared<const mpq_class>(mpz_class(n));
    } else {
        num_ = n;
    }
}

Rational::Rational(long long n) : Rational(static_cast<long>(n)) {}

Rational::Rational(std::int64_t num, std::int64_t den)
{
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    if (num == std::numeric_limits<std::int64_t>::min() || den == std::numeric_limits<std::int64_t>::min()) {
        assign_canonical(mpq_class(mpz_class(num), mpz_class(den)));
        return;
    }
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const auto g = static_cast<std::int64_t>(gcd_u64(uabs(num), uabs(den)));
    num_ = num / g;
    den_ = den / g;
}

Rational::Rational(const BigInt &n)
{
    assign_canonical(mpq_class(n));
}

Rational::Rational(const BigInt &num, const BigInt &den)
{
    if (den == 0) {
        throw domain_error("rational with zero denominator");
    }
    assign_canonical(mpq_class(num, den));
}

Rational::Rational(const mpq_class &q)
{
    assign_canonical(q);
}

void Rational::assign_canonical(mpq_class q)
{
    q.canonicalize();
    if (mpz_fits_small(q.get_num()) && mpz_fits_small(q.get_den())) {
        num_ = q.get_num().get_si();
        den_ = q.get_den().get_si();
        big_.reset();
    } else {
        num_ = 0;
        den_ = 1;
        big_ = std::make_shared<const mpq_class>(std::move(q));
    }
}

Rational Rational::from_mpq(mpq_class q)
{
    Rational r;
    r.assign_canonical(std::move(q));
    return r;
}

Rational Rational::parse(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
            s.remove_prefix(1);
        }
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto parse_int = [&](std::string_view s) {
        s = trim(s);
        std::string str(s);
        if (str.empty()) {
            throw usage_error("empty integer in rational literal");
        }
        std::size_t i = (str[0] == '-' || str[0] == '+') ? 1 : 0;
        if (i == str.size()) {
            throw usage_error("malformed rational literal '" + std::string(text) + "'");
        }
        for (; i < str.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(str[i]))) {
                throw usage_error("malformed rational literal '" + std::string(text) + "'");
            }
        }
        if (str[0] == '+') {
            str.erase(0, 1);
        }
        return mpz_class(str, 10);
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Rational(parse_int(text));
    }
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) {
        throw usage_error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(parse_int(text.substr(0, slash)), den);
}

std::string Rational::to_string() const
{
    if (!big_) {
        return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
    }
    if (big_->get_den() == 1) {
        return big_->get_num().get_str();
    }
    return big_->get_num().get_str() + "/" + big_->get_den().get_str();
}

int Rational::sign() const noexcept
{
    if (big_) {
        return sgn(*big_);
    }
    return (num_ > 0) - (num_ < 0);
}

bool Rational::is_integer() const noexcept
{
    return big_ ? big_->get_den() == 1 : den_ == 1;
}

BigInt Rational::numerator() const
{
    return big_ ? big_->get_num() : BigInt(static_cast<long>(num_));
}

BigInt Rational::denominator() const
{
    return big_ ? big_->get_den() : BigInt(static_cast<long>(den_));
}

mpq_class Rational::to_mpq() const
{
    if (big_) {
        return *big_;
    }
    mpq_class q(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)));
    return q;
}

double Rational::to_double() const
{
    return big_ ? big_->get_d() : static_cast<double>(num_) / static_cast<double>(den_);
}

std::optional<std::int64_t> Rational::to_int64() const noexcept
{
    if (big_ || den_ != 1) {
        return std::nullopt;
    }
    return num_;
}

Rational Rational::abs() const
{
    return sign() < 0 ? -*this : *this;
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw domain_error("inverse of zero");
    }
    if (!big_) {
        return num_ < 0 ? Rational(-den_, -num_) : Rational(den_, num_);
    }
    return from_mpq(mpq_class(big_->get_den(), big_->get_num()));
}

Rational Rational::pow(std::int64_t k) const
{
    if (k < 0) {
        return inverse().pow(-k);
    }
    Rational result(1);
    Rational base = *this;
    while (k > 0) {
        if (k & 1) {
            result *= base;
        }
        k >>= 1;
        if (k > 0) {
            base *= base;
        }
    }
    return result;
}

BigInt Rational::floor() const
{
    BigInt r;
    const auto q = to_mpq();
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

BigInt Rational::ceil() const
{
    BigInt r;
    const auto q = to_mpq();
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r;
}

Rational Rational::operator-() const
{
    if (!big_) {
        Rational r;
        r.num_ = -num_;
        r.den_ = den_;
        return r;
    }
    return from_mpq(mpq_class(-*big_));
}

Rational operator+(const Rational &a, const Rational &b)
{
    if (!a.big_ && !b.big_) {
        if (a.den_ == 1 && b.den_ == 1) {
            const i128 s = static_cast<i128>(a.num_) + b.num_;
            if (fits_small(s)) {
                return Rational(static_cast<long>(s));
            }
        } else {
            // Knuth's gcd-on-denominators addition, done in 128-bit.
            const std::uint64_t g = gcd_u64(static_cast<std::uint64_t>(a.den_), static_cast<std::uint64_t>(b.den_));
            if (g == 1) {
                const i128 n = static_cast<i128>(a.num_) * b.den_ + static_cast<i128>(b.num_) * a.den_;
                const i128 d = static_cast<i128>(a.den_) * b.den_;
                if (fits_small(n) && fits_small(d)) {
                    Rational r;
                    r.num_ = static_cast<std::int64_t>(n);
                    r.den_ = static_cast<std::int64_t>(d);
                    return r;
                }
            } else {
                const auto sg = static_cast<std::int64_t>(g);
                const i128 t = static_cast<i128>(a.num_) * (b.den_ / sg) + static_cast<i128>(b.num_) * (a.den_ / sg);
                if (t == 0) {
                    return Rational();
                }
                const u128 tabs = t < 0 ? static_cast<u128>(-t) : static_cast<u128>(t);
                const auto g2 = static_cast<std::int64_t>(gcd_u128(tabs, static_cast<u128>(g)));
                const i128 n = t / g2;
                const i128 d = static_cast<i128>(a.den_ / sg) * (b.den_ / g2);
                if (fits_small(n) && fits_small(d)) {
                    Rational r;
                    r.num_ = static_cast<std::int64_t>(n);
                    r.den_ = static_cast<std::int64_t>(d);
                    return r;
                }
            }
        }
    }
    return Rational::from_mpq(mpq_class(a.to_mpq() + b.to_mpq()));
}

Rational operator-(const Rational &a, const Rational &b)
{
    return a + (-b);
}

Rational operator*(const Rational &a, const Rational &b)
{
    if (!a.big_ && !b.big_) {
        if (a.num_ == 0 || b.num_ == 0) {
            return Rational();
        }
        const auto g1 = static_cast<std::int64_t>(gcd_u64(uabs(a.num_), static_cast<std::uint64_t>(b.den_)));
        const auto g2 = static_cast<std::int64_t>(gcd_u64(uabs(b.num_), static_cast<std::uint64_t>(a.den_)));
        const i128 n = static_cast<i128>(a.num_ / g1) * (b.num_ / g2);
        const i128 d = static_cast<i128>(a.den_ / g2) * (b.den_ / g1);
        if (fits_small(n) && fits_small(d)) {
            Rational r;
            r.num_ = static_cast<std::int64_t>(n);
            r.den_ = static_cast<std::int64_t>(d);
            return r;
        }
    }
    return Rational::from_mpq(mpq_class(a.to_mpq() * b.to_mpq()));
}

Rational operator/(const Rational &a, const Rational &b)
{
    return a * b.inverse();
}

Rational &Rational::operator+=(const Rational &o)
{
    return *this = *this + o;
}
Rational &Rational::operator-=(const Rational &o)
{
    return *this = *this - o;
}
Rational &Rational::operator*=(const Rational &o)
{
    return *this = *this * o;
}
Rational &Rational::operator/=(const Rational &o)
{
    return *this = *this / o;
}

bool operator==(const Rational &a, const Rational &b) noexcept
{
    if (!a.big_ && !b.big_) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    if (a.big_ && b.big_) {
        return *a.big_ == *b.big_;
    }
    return false;
}

std::strong_ordering operator<=>(const Rational &a, const Rational &b)
{
    if (!a.big_ && !b.big_) {
        const i128 l = static_cast<i128>(a.num_) * b.den_;
        const i128 r = static_cast<i128>(b.num_) * a.den_;
        return l <=> r;
    }
    const int c = cmp(a.to_mpq(), b.to_mpq());
    return c <=> 0;
}

std::size_t Rational::hash() const noexcept
{
    auto mix = [](std::uint64_t h, std::uint64_t v) {
        h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        return h;
    };
    if (!big_) {
        return static_cast<std::size_t>(mix(mix(0, static_cast<std::uint64_t>(num_)), static_cast<std::uint64_t>(den_)));
    }
    std::uint64_t h = 0x51ed270b27ULL;
    const auto *num = big_->get_num_mpz_t();
    const auto *den = big_->get_den_mpz_t();
    for (int i = 0; i < std::abs(num->_mp_size); ++i) {
        h = mix(h, num->_mp_d[i]);
    }
    h = mix(h, static_cast<std::uint64_t>(num->_mp_size));
    for (int i = 0; i < den->_mp_size; ++i) {
        h = mix(h, den->_mp_d[i]);
    }
    return static_cast<std::size_t>(h);
}

std::ostream &operator<<(std::ostream &os, const Rational &q)
{
    return os << q.to_string();
}

} // namespace fracpow
