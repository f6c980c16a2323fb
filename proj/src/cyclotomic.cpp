#include <fracpow/cyclotomic.hpp>

#include <mutex>
#include <unordered_map>

#include <fracpow/error.hpp>
#include <fracpow/number_theory.hpp>

namespace fracpow
{

namespace
{

std::vector<std::int64_t> divisors(std::int64_t n)
{
    std::vector<std::int64_t> small;
    std::vector<std::int64_t> large;
    for (std::int64_t d = 1; d * d <= n; ++d) {
        if (n % d == 0) {
            small.push_back(d);
            if (d * d != n) {
                large.push_back(n / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

void require_positive(std::int64_t n, const char *what)
{
    if (n < 1) {
        throw domain_error(std::string(what) + " requires a positive index");
    }
}

void require_phi(const CycloProduct &g, const char *what)
{
    if (g.basis != CycloProduct::Basis::phi) {
        throw usage_error(std::string(what) + " needs a phi-basis product");
    }
}

IntPolynomial one_minus_x_pow(std::int64_t d)
{
    std::vector<Rational> v(static_cast<std::size_t>(d) + 1);
    v[0] = Rational(1);
    v[static_cast<std::size_t>(d)] = Rational(-1);
    return IntPolynomial(std::move(v));
}

IntPolynomial power(const IntPolynomial &p, std::int64_t k)
{
    IntPolynomial acc(std::vector<Rational>{Rational(1)});
    for (std::int64_t i = 0; i < k; ++i) {
        acc = acc * p;
    }
    return acc;
}

} // namespace

CycloProduct::CycloProduct(Basis b, std::map<std::int64_t, Rational> e) : basis(b), exps(std::move(e))
{
    std::erase_if(exps, [](const auto &kv) { return kv.second.is_zero(); });
    for (const auto &[d, v] : exps) {
        require_positive(d, "cyclotomic product");
    }
}

Rational CycloProduct::at(std::int64_t d) const
{
    auto it = exps.find(d);
    return it == exps.end() ? Rational() : it->second;
}

void CycloProduct::accumulate(std::int64_t d, const Rational &v)
{
    require_positive(d, "cyclotomic product");
    Rational &slot = exps[d];
    slot += v;
    if (slot.is_zero()) {
        exps.erase(d);
    }
}

const char *basis_name(CycloProduct::Basis b)
{
    return b == CycloProduct::Basis::phi ? "phi" : "onemx";
}

IntPolynomial cyclotomic_poly(std::int64_t n)
{
    require_positive(n, "cyclotomic_poly");
    static std::mutex mu;
    static std::unordered_map<std::int64_t, IntPolynomial> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(n); it != cache.end()) {
            return it->second;
        }
    }
    IntPolynomial num(std::vector<Rational>{Rational(1)});
    IntPolynomial den(std::vector<Rational>{Rational(1)});
    for (const auto d : divisors(n)) {
        const int m = mobius(n / d);
        if (m == 1) {
            num = num * one_minus_x_pow(d);
        } else if (m == -1) {
            den = den * one_minus_x_pow(d);
        }
    }
    auto [q, r] = divmod(num, den);
    if (!r.is_zero()) {
        throw domain_error("internal: inexact cyclotomic division");
    }
    std::lock_guard lock(mu);
    cache.emplace(n, q);
    return q;
}

CycloProduct onemxn_factor(std::int64_t n)
{
    require_positive(n, "onemxn_factor");
    CycloProduct out;
    for (const auto d : divisors(n)) {
        out.exps.emplace(d, Rational(1));
    }
    return out;
}

CycloProduct phi_as_onemx(std::int64_t n)
{
    require_positive(n, "phi_as_onemx");
    CycloProduct out;
    out.basis = CycloProduct::Basis::onemx;
    for (const auto d : divisors(n)) {
        const int m = mobius(n / d);
        if (m != 0) {
            out.exps.emplace(d, Rational(m));
        }
    }
    return out;
}

CycloProduct expand_phi_power(std::int64_t d, std::int64_t a)
{
    require_positive(d, "expand_phi_power");
    require_positive(a, "expand_phi_power");
    const std::int64_t lo = d * angle(a, d);
    CycloProduct out;
    for (const auto k : divisors(a * d / lo)) {
        out.exps.emplace(lo * k, Rational(1));
    }
    return out;
}

CycloProduct substitute_cyclo(const CycloProduct &g, std::int64_t a)
{
    require_phi(g, "substitute_cyclo");
    require_positive(a, "substitute_cyclo");
    CycloProduct out;
    for (const auto &[d, h] : g.exps) {
        for (const auto &[f, one] : expand_phi_power(d, a).exps) {
            out.accumulate(f, h);
        }
    }
    return out;
}

CycloProduct apply_mform(const CycloProduct &g, const MSpec &m)
{
    require_phi(g, "apply_mform");
    CycloProduct out;
    for (const auto &pair : m.pairs()) {
        for (const auto &[f, h] : substitute_cyclo(g, pair.b).exps) {
            out.accumulate(f, h * Rational(pair.e));
        }
    }
    return out;
}

CycloProduct to_onemx(const CycloProduct &g)
{
    if (g.basis == CycloProduct::Basis::onemx) {
        return g;
    }
    CycloProduct out;
    out.basis = CycloProduct::Basis::onemx;
    for (const auto &[d, h] : g.exps) {
        for (const auto &[k, mu] : phi_as_onemx(d).exps) {
            out.accumulate(k, h * mu);
        }
    }
    return out;
}

CycloProduct to_phi(const CycloProduct &g)
{
    if (g.basis == CycloProduct::Basis::phi) {
        return g;
    }
    CycloProduct out;
    for (const auto &[d, v] : g.exps) {
        for (const auto &[k, one] : onemxn_factor(d).exps) {
            out.accumulate(k, v);
        }
    }
    return out;
}

IntPolynomial expand_polynomial(const CycloProduct &g)
{
    IntPolynomial acc(std::vector<Rational>{Rational(1)});
    for (const auto &[d, v] : g.exps) {
        const auto k = v.to_int64();
        if (!k || *k < 0) {
            throw domain_error("polynomial expansion needs nonnegative integer exponents");
        }
        const IntPolynomial base = g.basis == CycloProduct::Basis::phi ? cyclotomic_poly(d) : one_minus_x_pow(d);
        acc = acc * power(base, *k);
    }
    return acc;
}

FracSeries expand_series(const CycloProduct &g, const Rational &cutoff)
{
    return onemx_product_series(to_onemx(g).exps, cutoff);
}

CyclotomicFactorization nprime_cyclotomic_factorization(const IntPolynomial &p, const MSpec &m,
                                                        bool include_1mx_inverse)
{
    if (!p.integral()) {
        throw precondition_error("cyclotomic part needs integer coefficients");
    }
    if (!p.coeff(0).is_one()) {
        throw precondition_error("cyclotomic part needs P(0) = 1");
    }
    if (p.eval(Rational(1)).is_zero()) {
        throw precondition_error("cyclotomic part needs P(1) != 0");
    }
    CyclotomicFactorization out{CycloProduct(), p};
    const std::int64_t deg = p.degree();
    // phi(d) >= sqrt(d / 2), so phi(d) <= deg forces d <= 2 deg^2.
    const std::int64_t bound = 2 * deg * deg + 2;
    for (std::int64_t d = 2; d <= bound && out.residual.degree() > 0; ++d) {
        if (euler_phi(d) > out.residual.degree() || !in_nprime(d, m)) {
            continue;
        }
        const IntPolynomial phi = cyclotomic_poly(d);
        for (;;) {
            auto [q, r] = divmod(out.residual, phi);
            if (!r.is_zero()) {
                break;
            }
            out.residual = std::move(q);
            out.part.accumulate(d, Rational(1));
        }
    }
    if (include_1mx_inverse) {
        out.part.accumulate(1, Rational(-1));
    }
    return out;
}

CycloProduct nprime_cyclotomic_part(const IntPolynomial &p, const MSpec &m, bool include_1mx_inverse)
{
    return nprime_cyclotomic_factorization(p, m, include_1mx_inverse).part;
}

} // namespace fracpow
