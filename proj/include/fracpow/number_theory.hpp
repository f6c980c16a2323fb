#ifndef FRACPOW_NUMBER_THEORY_HPP
#define FRACPOW_NUMBER_THEORY_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <fracpow/mspec.hpp>
#include <fracpow/rational.hpp>

namespace fracpow
{

// Arithmetic predicates and operators over Z and Q used throughout the solver:
// p-adic order, Moebius and Euler functions, the N' / Q_b' membership tests
// determined by an MSpec, the positive part [y] and the <a|d) operator, and a
// Moebius inversion over the divisibility order restricted to Q_b' - N'.

// Default prime sieve limit; FRACPOW_SIEVE_LIMIT overrides it at first use.
inline constexpr std::int64_t k_default_sieve_limit = 1'000'000;

// Current sieve limit (reads the environment once).
std::int64_t sieve_limit();

// Prime factorization by trial division over the cached sieve. Any cofactor
// that cannot be certified prime (it exceeds sieve_limit()^2) raises
// capacity_error.
std::vector<std::pair<std::int64_t, int>> factorize(std::int64_t n);

bool is_prime(std::int64_t p);

// Highest v with p^v | q, extended to rationals by ord_p(a/b) = ord_p(a) - ord_p(b).
std::int64_t ord_p(const Rational &q, std::int64_t p);

int mobius(std::int64_t n);
std::int64_t euler_phi(std::int64_t n);

// Every prime divisor of n divides b_0 b_1 ... b_m.
bool in_nprime(std::int64_t n, const MSpec &m);
bool in_nprime(const BigInt &n, const MSpec &m);

// q = n / b^t with n in N' and t >= 0, where b = b_0.
bool in_qbprime(const Rational &q, const MSpec &m);

// Member of Q_b' - N' (equivalently: in Q_b' and not an integer).
bool in_qbprime_minus_nprime(const Rational &q, const MSpec &m);

// [y] = prod over primes with ord_p(y) > 0 of p^{ord_p(y)}.
BigInt bracket(const Rational &y);

// <a|d) = prod over primes p | gcd(a, d) of p^{ord_p(a)}.
std::int64_t angle(std::int64_t a, std::int64_t d);

// lambda | mu  iff  mu / lambda is a positive integer.
bool divides_rational(const Rational &lambda, const Rational &mu);

using RationalMap = std::map<Rational, Rational>;

// B_m = sum over n | m, n in Q_b' - N' of A_n, evaluated at each of `keys`.
RationalMap divisor_sum_modified(const RationalMap &a, const MSpec &m, const std::vector<Rational> &keys);

// A_n = sum over m | n, m in Q_b' - N' of mu(n/m) B_m. Evaluated at each of
// `keys`, or at the support of `b` when keys is empty. Zero results are kept
// out of the returned map.
RationalMap mobius_inversion_modified(const RationalMap &b, const MSpec &m, const std::vector<Rational> &keys = {});

} // namespace fracpow

#endif
