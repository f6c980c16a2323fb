#include <fracpow/number_theory.hpp>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

#include <fracpow/error.hpp>

namespace fracpow
{

namespace
{

struct Sieve {
    std::int64_t limit = 0;
    std::vector<std::int64_t> primes;
    std::vector<bool> composite;
};

const Sieve &sieve()
{
    static const Sieve s = [] {
        Sieve out;
        out.limit = k_default_sieve_limit;
        if (const char *env = std::getenv("FRACPOW_SIEVE_LIMIT")) {
            char *end = nullptr;
            const long long v = std::strtoll(env, &end, 10);
            if (end != env && *end == '\0' && v >= 2) {
                out.limit = v;
            }
        }
        out.composite.assign(static_cast<std::size_t>(out.limit) + 1, false);
        for (std::int64_t i = 2; i <= out.limit; ++i) {
            if (out.composite[static_cast<std::size_t>(i)]) {
                continue;
            }
            out.primes.push_back(i);
            for (std::int64_t j = i * i; j <= out.limit; j += i) {
                out.composite[static_cast<std::size_t>(j)] = true;
            }
        }
        return out;
    }();
    return s;
}

void require_positive(std::int64_t n, const char *what)
{
    if (n <= 0) {
        throw domain_error(std::string(what) + " requires a positive integer");
    }
}

} // namespace

std::int64_t sieve_limit()
{
    return sieve().limit;
}

std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n)
{
    require_positive(n, "factorize");
    const auto &s = sieve();
    std::vector<std::pair<std::int64_t, int>> out;
    for (const auto p : s.primes) {
        if (static_cast<__int128>(p) * p > n) {
            break;
        }
        if (n % p == 0) {
            int k = 0;
            while (n % p == 0) {
                n /= p;
                ++k;
            }
            out.emplace_back(p, k);
        }
    }
    if (n > 1) {
        if (static_cast<__int128>(s.limit) * s.limit < n) {
            throw capacity_error("cannot factor " + std::to_string(n) + " with prime sieve limit " +
                                 std::to_string(s.limit));
        }
        out.emplace_back(n, 1);
    }
    return out;
}

bool is_prime(std::int64_t p)
{
    if (p < 2) {
        return false;
    }
    const auto &s = sieve();
    if (p <= s.limit) {
        return !s.composite[static_cast<std::size_t>(p)];
    }
    const auto f = factorize(p);
    return f.size() == 1 && f[0].second == 1;
}

std::int64_t ord_p(const Rational &q, std::int64_t p)
{
    if (q.is_zero()) {
        throw domain_error("ord_p of zero is undefined");
    }
    if (!is_prime(p)) {
        throw domain_error("ord_p needs a prime, got " + std::to_string(p));
    }
    if (auto num = q.small_numerator()) {
        std::int64_t a = *num < 0 ? -*num : *num;
        std::int64_t b = *q.small_denominator();
        std::int64_t v = 0;
        while (a % p == 0) {
            a /= p;
            ++v;
        }
        while (b % p == 0) {
            b /= p;
            --v;
        }
        return v;
    }
    const BigInt pp(static_cast<long>(p));
    BigInt tmp;
    BigInt num = abs(q.numerator());
    BigInt den = q.denominator();
    const auto up = static_cast<std::int64_t>(mpz_remove(tmp.get_mpz_t(), num.get_mpz_t(), pp.get_mpz_t()));
    const auto down = static_cast<std::int64_t>(mpz_remove(tmp.get_mpz_t(), den.get_mpz_t(), pp.get_mpz_t()));
    return up - down;
}

int mobius(std::int64_t n)
{
    require_positive(n, "mobius");
    int sign = 1;
    for (const auto &[p, k] : factorize(n)) {
        if (k > 1) {
            return 0;
        }
        sign = -sign;
    }
    return sign;
}

std::int64_t euler_phi(std::int64_t n)
{
    require_positive(n, "euler_phi");
    std::int64_t r = n;
    for (const auto &[p, k] : factorize(n)) {
        r = r / p * (p - 1);
    }
    return r;
}

bool in_nprime(std::int64_t n, const MSpec &m)
{
    require_positive(n, "in_nprime");
    for (const auto &pair : m.pairs()) {
        std::int64_t g;
        while ((g = std::gcd(n, pair.b)) > 1) {
            n /= g;
        }
    }
    return n == 1;
}

bool in_nprime(const BigInt &n, const MSpec &m)
{
    if (n <= 0) {
        throw domain_error("in_nprime requires a positive integer");
    }
    BigInt r = n;
    BigInt g;
    for (const auto &pair : m.pairs()) {
        const BigInt b(static_cast<long>(pair.b));
        for (;;) {
            mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), b.get_mpz_t());
            if (g == 1) {
                break;
            }
            r /= g;
        }
    }
    return r == 1;
}

bool in_qbprime(const Rational &q, const MSpec &m)
{
    if (!q.is_positive()) {
        throw domain_error("in_qbprime requires a positive rational");
    }
    const MSpec base({{m.base(), 1}});
    return in_nprime(q.denominator(), base) && in_nprime(q.numerator(), m);
}

bool in_qbprime_minus_nprime(const Rational &q, const MSpec &m)
{
    return !q.is_integer() && in_qbprime(q, m);
}

BigInt bracket(const Rational &y)
{
    if (!y.is_positive()) {
        throw domain_error("bracket requires a positive rational");
    }
    // Primes with positive order are exactly those of the reduced numerator.
    return y.numerator();
}

std::int64_t angle(std::int64_t a, std::int64_t d)
{
    require_positive(a, "angle");
    require_positive(d, "angle");
    const std::int64_t c = std::gcd(a, d);
    std::int64_t r = 1;
    std::int64_t g;
    while ((g = std::gcd(a, c)) > 1) {
        r *= g;
        a /= g;
    }
    return r;
}

bool divides_rational(const Rational &lambda, const Rational &mu)
{
    if (!lambda.is_positive() || !mu.is_positive()) {
        throw domain_error("divides_rational requires positive arguments");
    }
    return (mu / lambda).is_integer();
}

namespace
{

void check_keys(const RationalMap &map, const MSpec &m)
{
    for (const auto &[k, v] : map) {
        if (!k.is_positive() || !in_qbprime_minus_nprime(k, m)) {
            throw domain_error("key " + k.to_string() + " lies outside Q_b' - N'");
        }
    }
}

void check_keys(const std::vector<Rational> &keys, const MSpec &m)
{
    for (const auto &k : keys) {
        if (!k.is_positive() || !in_qbprime_minus_nprime(k, m)) {
            throw domain_error("key " + k.to_string() + " lies outside Q_b' - N'");
        }
    }
}

} // namespace

RationalMap divisor_sum_modified(const RationalMap &a, const MSpec &m, const std::vector<Rational> &keys)
{
    check_keys(a, m);
    check_keys(keys, m);
    RationalMap out;
    for (const auto &key : keys) {
        Rational s;
        for (const auto &[n, v] : a) {
            if (n <= key && divides_rational(n, key)) {
                s += v;
            }
        }
        if (!s.is_zero()) {
            out[key] = s;
        }
    }
    return out;
}

RationalMap mobius_inversion_modified(const RationalMap &b, const MSpec &m, const std::vector<Rational> &keys)
{
    check_keys(b, m);
    check_keys(keys, m);
    std::vector<Rational> targets = keys;
    if (targets.empty()) {
        for (const auto &[k, v] : b) {
            targets.push_back(k);
        }
    }
    RationalMap out;
    for (const auto &n : targets) {
        Rational s;
        for (const auto &[k, v] : b) {
            if (k > n) {
                break;
            }
            const Rational q = n / k;
            if (!q.is_integer()) {
                continue;
            }
            const auto qi = q.to_int64();
            if (!qi) {
                throw capacity_error("divisibility quotient exceeds int64");
            }
            const int mu = mobius(*qi);
            if (mu != 0) {
                s += v * Rational(mu);
            }
        }
        if (!s.is_zero()) {
            out[n] = s;
        }
    }
    return out;
}

} // namespace fracpow
