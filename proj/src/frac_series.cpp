#include <fracpow/frac_series.hpp>

#include <algorithm>
#include <cmath>
#include <unordered_map>

#include <fracpow/error.hpp>

namespace fracpow
{

namespace
{

void require_positive_cutoff(const Rational &t)
{
    if (!t.is_positive()) {
        throw domain_error("series cutoff must be positive, got " + t.to_string());
    }
}

void require_same_cutoff(const FracSeries &f, const FracSeries &g)
{
    if (f.cutoff() != g.cutoff()) {
        throw usage_error("series cutoffs differ: " + f.cutoff().to_string() + " vs " + g.cutoff().to_string());
    }
}

std::vector<Term> normalize(const Rational &cutoff, std::vector<Term> terms)
{
    std::sort(terms.begin(), terms.end(), [](const Term &a, const Term &b) { return a.exponent < b.exponent; });
    std::vector<Term> out;
    out.reserve(terms.size());
    for (auto &t : terms) {
        if (t.exponent.sign() < 0) {
            throw domain_error("negative exponent " + t.exponent.to_string());
        }
        if (t.exponent > cutoff) {
            break;
        }
        if (!out.empty() && out.back().exponent == t.exponent) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(std::move(t));
        }
    }
    std::erase_if(out, [](const Term &t) { return t.coeff.is_zero(); });
    return out;
}

// Sum of h's terms beyond the constant.
std::vector<Term> tail_terms(const FracSeries &f)
{
    const auto &t = f.terms();
    if (!t.empty() && t.front().exponent.is_zero()) {
        return {t.begin() + 1, t.end()};
    }
    return t;
}

// Generic push-form solver for series g defined by a recurrence in which the
// coefficient at kappa depends only on coefficients below kappa. `acc` starts
// with seed contributions; finalize(kappa, acc_kappa) returns g_kappa; each
// finalized g_lambda pushes contrib(lambda, g_lambda, mu, h_mu) into
// acc[lambda + mu] for every term of h.
template <class Finalize, class Contrib>
FracSeries push_recurrence(const Rational &cutoff, std::map<Rational, Rational> acc, const std::vector<Term> &h,
                           Finalize finalize, Contrib contrib)
{
    std::vector<Term> out;
    while (!acc.empty()) {
        auto node = acc.extract(acc.begin());
        const Rational &kappa = node.key();
        if (kappa > cutoff) {
            break;
        }
        Rational value = finalize(kappa, node.mapped());
        if (value.is_zero()) {
            continue;
        }
        for (const auto &[mu, hm] : h) {
            Rational e = kappa + mu;
            if (e > cutoff) {
                break;
            }
            auto c = contrib(kappa, value, mu, hm);
            if (c.is_zero()) {
                continue;
            }
            auto [it, inserted] = acc.try_emplace(std::move(e), c);
            if (!inserted) {
                it->second += c;
            }
        }
        out.push_back({kappa, std::move(value)});
    }
    return FracSeries::from_sorted(cutoff, std::move(out));
}

} // namespace

FracSeries::FracSeries(Rational cutoff) : cutoff_(std::move(cutoff))
{
    require_positive_cutoff(cutoff_);
}

FracSeries::FracSeries(Rational cutoff, std::vector<Term> terms) : cutoff_(std::move(cutoff))
{
    require_positive_cutoff(cutoff_);
    terms_ = normalize(cutoff_, std::move(terms));
}

FracSeries::FracSeries(Rational cutoff, const std::map<Rational, Rational> &terms) : cutoff_(std::move(cutoff))
{
    require_positive_cutoff(cutoff_);
    std::vector<Term> v;
    v.reserve(terms.size());
    for (const auto &[e, c] : terms) {
        v.push_back({e, c});
    }
    terms_ = normalize(cutoff_, std::move(v));
}

FracSeries FracSeries::from_sorted(Rational cutoff, std::vector<Term> terms)
{
    FracSeries f(std::move(cutoff));
    f.terms_ = std::move(terms);
    return f;
}

FracSeries FracSeries::constant(const Rational &c, const Rational &cutoff)
{
    return FracSeries(cutoff, std::vector<Term>{{Rational(), c}});
}

FracSeries FracSeries::monomial(const Rational &c, const Rational &exponent, const Rational &cutoff)
{
    return FracSeries(cutoff, std::vector<Term>{{exponent, c}});
}

Rational FracSeries::coeff(const Rational &exponent) const
{
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponent,
                               [](const Term &t, const Rational &e) { return t.exponent < e; });
    if (it != terms_.end() && it->exponent == exponent) {
        return it->coeff;
    }
    return Rational();
}

Rational FracSeries::constant_term() const
{
    if (!terms_.empty() && terms_.front().exponent.is_zero()) {
        return terms_.front().coeff;
    }
    return Rational();
}

bool FracSeries::exponents_in_qb(std::int64_t b) const
{
    for (const auto &t : terms_) {
        BigInt den = t.exponent.denominator();
        const BigInt bb(static_cast<long>(b));
        BigInt g;
        for (;;) {
            mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), bb.get_mpz_t());
            if (g == 1) {
                break;
            }
            den /= g;
        }
        if (den != 1) {
            return false;
        }
    }
    return true;
}

const Rational &SeriesOrder::value() const
{
    if (!value_) {
        throw domain_error("order of a zero truncation is infinite");
    }
    return *value_;
}

std::strong_ordering operator<=>(const SeriesOrder &a, const SeriesOrder &b)
{
    if (a.is_infinite() || b.is_infinite()) {
        return b.is_infinite() <=> a.is_infinite();
    }
    return *a.value_ <=> *b.value_;
}

SeriesOrder operator+(const SeriesOrder &a, const SeriesOrder &b)
{
    if (a.is_infinite() || b.is_infinite()) {
        return SeriesOrder::infinity();
    }
    return SeriesOrder(*a.value_ + *b.value_);
}

const Rational &Valuation::order() const
{
    if (!ord_) {
        throw domain_error("zero valuation has no order");
    }
    return *ord_;
}

std::optional<Rational> Valuation::exact() const
{
    if (!ord_) {
        return Rational();
    }
    const auto k = ord_->to_int64();
    if (!k) {
        return std::nullopt;
    }
    return k_valuation_beta.pow(*k);
}

double Valuation::to_double() const
{
    return ord_ ? std::pow(k_valuation_beta.to_double(), ord_->to_double()) : 0.0;
}

std::strong_ordering operator<=>(const Valuation &a, const Valuation &b)
{
    if (a.is_zero() || b.is_zero()) {
        return b.is_zero() <=> a.is_zero();
    }
    return *b.ord_ <=> *a.ord_;
}

Valuation operator*(const Valuation &a, const Valuation &b)
{
    if (a.is_zero() || b.is_zero()) {
        return Valuation::zero();
    }
    return Valuation(*a.ord_ + *b.ord_);
}

FracSeries add(const FracSeries &f, const FracSeries &g)
{
    require_same_cutoff(f, g);
    const auto &a = f.terms();
    const auto &b = g.terms();
    std::vector<Term> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].exponent < b[j].exponent)) {
            out.push_back(a[i++]);
        } else if (i == a.size() || b[j].exponent < a[i].exponent) {
            out.push_back(b[j++]);
        } else {
            Rational c = a[i].coeff + b[j].coeff;
            if (!c.is_zero()) {
                out.push_back({a[i].exponent, std::move(c)});
            }
            ++i;
            ++j;
        }
    }
    return FracSeries::from_sorted(f.cutoff(), std::move(out));
}

FracSeries negate(const FracSeries &f)
{
    std::vector<Term> out = f.terms();
    for (auto &t : out) {
        t.coeff = -t.coeff;
    }
    return FracSeries::from_sorted(f.cutoff(), std::move(out));
}

FracSeries sub(const FracSeries &f, const FracSeries &g)
{
    return add(f, negate(g));
}

FracSeries scale(const FracSeries &f, const Rational &c)
{
    if (c.is_zero()) {
        return FracSeries(f.cutoff());
    }
    std::vector<Term> out = f.terms();
    for (auto &t : out) {
        t.coeff *= c;
    }
    return FracSeries::from_sorted(f.cutoff(), std::move(out));
}

FracSeries mul(const FracSeries &f, const FracSeries &g)
{
    require_same_cutoff(f, g);
    const auto &a = f.terms();
    const auto &b = g.terms();
    const Rational &cutoff = f.cutoff();
    std::unordered_map<Rational, Rational, RationalHash> acc;
    for (const auto &x : a) {
        for (const auto &y : b) {
            Rational e = x.exponent + y.exponent;
            if (e > cutoff) {
                break;
            }
            auto [it, inserted] = acc.try_emplace(std::move(e));
            it->second += x.coeff * y.coeff;
        }
    }
    std::vector<Term> out;
    out.reserve(acc.size());
    for (auto &[e, c] : acc) {
        if (!c.is_zero()) {
            out.push_back({e, c});
        }
    }
    std::sort(out.begin(), out.end(), [](const Term &l, const Term &r) { return l.exponent < r.exponent; });
    return FracSeries::from_sorted(cutoff, std::move(out));
}

FracSeries operator+(const FracSeries &f, const FracSeries &g)
{
    return add(f, g);
}

FracSeries operator-(const FracSeries &f, const FracSeries &g)
{
    return sub(f, g);
}

FracSeries operator*(const FracSeries &f, const FracSeries &g)
{
    return mul(f, g);
}

SeriesOrder order(const FracSeries &f)
{
    return f.is_zero() ? SeriesOrder::infinity() : SeriesOrder(f.terms().front().exponent);
}

Valuation valuation(const FracSeries &f)
{
    return f.is_zero() ? Valuation::zero() : Valuation(f.terms().front().exponent);
}

FracSeries invert(const FracSeries &f)
{
    const Rational c = f.constant_term();
    if (c.is_zero()) {
        throw not_invertible_error("series with zero constant term is not invertible");
    }
    const Rational inv_c = c.inverse();
    return push_recurrence(
        f.cutoff(), {{Rational(), inv_c}}, tail_terms(f),
        [&](const Rational &kappa, const Rational &acc) { return kappa.is_zero() ? acc : acc * inv_c; },
        [](const Rational &, const Rational &g, const Rational &, const Rational &h) { return -(h * g); });
}

FracSeries substitute_power(const FracSeries &f, const Rational &rho)
{
    if (!rho.is_positive()) {
        throw domain_error("substitution exponent must be positive");
    }
    std::vector<Term> out = f.terms();
    for (auto &t : out) {
        t.exponent *= rho;
    }
    return FracSeries::from_sorted(f.cutoff() * rho, std::move(out));
}

FracSeries truncate(const FracSeries &f, const Rational &cutoff)
{
    if (cutoff > f.cutoff()) {
        throw usage_error("cannot extend a series from cutoff " + f.cutoff().to_string() + " to " +
                          cutoff.to_string());
    }
    require_positive_cutoff(cutoff);
    std::vector<Term> out;
    for (const auto &t : f.terms()) {
        if (t.exponent > cutoff) {
            break;
        }
        out.push_back(t);
    }
    return FracSeries::from_sorted(cutoff, std::move(out));
}

FracSeries xderive(const FracSeries &f)
{
    std::vector<Term> out;
    out.reserve(f.size());
    for (const auto &t : f.terms()) {
        if (!t.exponent.is_zero()) {
            out.push_back({t.exponent, t.exponent * t.coeff});
        }
    }
    return FracSeries::from_sorted(f.cutoff(), std::move(out));
}

FracSeries log_derivative(const FracSeries &f)
{
    return mul(xderive(f), invert(f));
}

FracSeries exp_series(const FracSeries &f)
{
    if (!f.constant_term().is_zero()) {
        throw domain_error("exp_series needs a series of positive order");
    }
    return push_recurrence(
        f.cutoff(), {{Rational(), Rational(1)}}, f.terms(),
        [](const Rational &kappa, const Rational &acc) { return kappa.is_zero() ? acc : acc / kappa; },
        [](const Rational &, const Rational &g, const Rational &mu, const Rational &h) { return mu * h * g; });
}

FracSeries log1p_series(const FracSeries &f)
{
    if (!f.constant_term().is_zero()) {
        throw domain_error("log1p_series needs a series of positive order");
    }
    std::map<Rational, Rational> seed;
    for (const auto &t : f.terms()) {
        seed.emplace(t.exponent, t.exponent * t.coeff);
    }
    return push_recurrence(
        f.cutoff(), std::move(seed), f.terms(),
        [](const Rational &kappa, const Rational &acc) { return acc / kappa; },
        [](const Rational &lambda, const Rational &l, const Rational &, const Rational &h) {
            return -(h * lambda * l);
        });
}

FracSeries pow_alpha(const FracSeries &f, const Rational &alpha)
{
    if (!f.constant_term().is_one()) {
        throw domain_error("pow_alpha needs a series with constant term 1");
    }
    return push_recurrence(
        f.cutoff(), {{Rational(), Rational(1)}}, tail_terms(f),
        [](const Rational &kappa, const Rational &acc) { return kappa.is_zero() ? acc : acc / kappa; },
        [&](const Rational &lambda, const Rational &g, const Rational &mu, const Rational &h) {
            return (alpha * mu - lambda) * h * g;
        });
}

FracSeries product_truncated(const std::vector<FracSeries> &factors, const Rational &cutoff)
{
    FracSeries acc = FracSeries::constant(Rational(1), cutoff);
    for (const auto &f : factors) {
        if (!f.constant_term().is_one()) {
            throw domain_error("product factor must have constant term 1");
        }
        acc = mul(acc, f);
    }
    return acc;
}

std::map<std::int64_t, Rational> recover_product_exponents(const FracSeries &f, std::int64_t max_n)
{
    if (!f.constant_term().is_one()) {
        throw domain_error("recover_product_exponents needs constant term 1");
    }
    if (max_n < 1 || Rational(max_n) > f.cutoff()) {
        throw usage_error("max_n must lie in [1, cutoff]");
    }
    for (const auto &t : f.terms()) {
        if (t.exponent > Rational(max_n)) {
            break;
        }
        if (!t.exponent.is_integer()) {
            throw domain_error("fractional exponent " + t.exponent.to_string() + " below max_n");
        }
    }
    const FracSeries ld = log_derivative(truncate(f, Rational(max_n)));
    // x f'/f = -sum_N x^N sum_{n | N} n alpha_n.
    std::vector<Rational> alpha(static_cast<std::size_t>(max_n) + 1);
    std::map<std::int64_t, Rational> out;
    for (std::int64_t n = 1; n <= max_n; ++n) {
        Rational s = ld.coeff(Rational(n));
        for (std::int64_t d = 1; d < n; ++d) {
            if (n % d == 0) {
                s += Rational(d) * alpha[static_cast<std::size_t>(d)];
            }
        }
        alpha[static_cast<std::size_t>(n)] = -s / Rational(n);
        if (!alpha[static_cast<std::size_t>(n)].is_zero()) {
            out.emplace(n, alpha[static_cast<std::size_t>(n)]);
        }
    }
    return out;
}

FracSeries onemx_product_series(const std::map<std::int64_t, Rational> &exps, const Rational &cutoff)
{
    // log prod (1 - x^d)^{a_d} = -sum_d a_d sum_j x^{dj} / j.
    std::map<Rational, Rational> log_terms;
    for (const auto &[d, a] : exps) {
        if (d < 1) {
            throw domain_error("product index must be positive");
        }
        for (std::int64_t j = 1; Rational(d * j) <= cutoff; ++j) {
            log_terms[Rational(d * j)] -= a / Rational(j);
        }
    }
    return exp_series(FracSeries(cutoff, log_terms));
}

} // namespace fracpow
