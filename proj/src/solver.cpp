#include <fracpow/solver.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include <fracpow/error.hpp>
#include <fracpow/number_theory.hpp>

namespace fracpow
{

namespace
{

thread_local int g_last_iterations = 0;

FracSeries one_minus_xd(std::int64_t d, const Rational &cutoff)
{
    return FracSeries(cutoff, std::vector<Term>{{Rational(0), Rational(1)}, {Rational(d), Rational(-1)}});
}

// -sum_j c x^{dj} / j accumulated into `terms`.
void add_log_onemx(std::map<Rational, Rational> &terms, std::int64_t d, const Rational &c, const Rational &cutoff)
{
    for (std::int64_t j = 1; Rational(d * j) <= cutoff; ++j) {
        terms[Rational(d * j)] -= c / Rational(j);
    }
}

FracSeries int_power(const FracSeries &f, std::int64_t k)
{
    FracSeries acc = FracSeries::constant(Rational(1), f.cutoff());
    for (std::int64_t i = 0; i < k; ++i) {
        acc = mul(acc, f);
    }
    return acc;
}

int iteration_cap(const MSpec &m, const Rational &cutoff)
{
    if (m.m() == 0) {
        return 3;
    }
    Rational theta_min = m.theta(1);
    for (const auto &t : m.thetas()) {
        theta_min = std::min(theta_min, t);
    }
    const double steps = std::log(cutoff.to_double() * static_cast<double>(m.base())) / std::log(theta_min.to_double());
    return static_cast<int>(std::ceil(std::max(steps, 0.0))) + 3;
}

// Value of the alternating sum S(v) = m_v - sum_i nu_i S(v / theta_i), with
// m_v = 0 off N'. S vanishes below the smallest support index and wherever v
// has a denominator prime not dividing b_0, since dividing by theta_i can
// never clear it.
class CriterionSum
{
public:
    CriterionSum(const MSpec &m, const MExps &mexps) : base_({{m.base(), 1}}), thetas_(m.thetas()), nus_(m.nus())
    {
        for (const auto &[d, v] : mexps) {
            if (d >= 1 && !v.is_zero() && in_nprime(d, m)) {
                mexps_.emplace(Rational(d), v);
            }
        }
    }

    Rational operator()(const Rational &v)
    {
        if (mexps_.empty() || v < mexps_.begin()->first) {
            return Rational();
        }
        if (!in_nprime(v.denominator(), base_)) {
            return Rational();
        }
        if (auto it = memo_.find(v); it != memo_.end()) {
            return it->second;
        }
        Rational r;
        if (auto it = mexps_.find(v); it != mexps_.end()) {
            r = it->second;
        }
        for (std::size_t i = 0; i < thetas_.size(); ++i) {
            r -= nus_[i] * (*this)(v / thetas_[i]);
        }
        memo_.emplace(v, r);
        return r;
    }

private:
    MSpec base_;
    std::vector<Rational> thetas_;
    std::vector<Rational> nus_;
    std::map<Rational, Rational> mexps_;
    std::map<Rational, Rational> memo_;
};

void validate_witness(const MSpec &m, const Witness &w)
{
    if (m.m() == 0 || !is_prime(w.p) || w.t < 1) {
        throw hypothesis_error("invalid witness");
    }
    const Rational pt = Rational(w.p).pow(w.t);
    if (!(Rational(m.base()) / pt).is_integer()) {
        throw hypothesis_error("witness p^t does not divide b_0");
    }
    for (std::size_t i = 1; i < m.size(); ++i) {
        if ((Rational(m.b(i)) / pt).is_integer()) {
            throw hypothesis_error("witness p^t divides b_" + std::to_string(i));
        }
    }
}

} // namespace

RhsSpec RhsSpec::poly_over_1mx(IntPolynomial p)
{
    if (!p.coeff(0).is_one()) {
        throw domain_error("right-hand side needs P(0) = 1");
    }
    if (p.eval(Rational(1)).is_zero()) {
        throw domain_error("right-hand side needs P(1) != 0");
    }
    RhsSpec r;
    r.variant_ = Variant::poly_over_1mx;
    r.poly_ = std::move(p);
    return r;
}

RhsSpec RhsSpec::onemx_product(MExps mexps)
{
    std::erase_if(mexps, [](const auto &kv) { return kv.second.is_zero(); });
    for (const auto &[d, v] : mexps) {
        if (d < 1) {
            throw domain_error("product index must be positive");
        }
    }
    RhsSpec r;
    r.variant_ = Variant::onemx_product;
    r.mexps_ = std::move(mexps);
    return r;
}

FracSeries RhsSpec::expand(const Rational &cutoff) const
{
    if (variant_ == Variant::poly_over_1mx) {
        return mul(poly_.to_series(cutoff), invert(one_minus_xd(1, cutoff)));
    }
    FracSeries acc = FracSeries::constant(Rational(1), cutoff);
    for (const auto &[d, v] : mexps_) {
        const FracSeries base = one_minus_xd(d, cutoff);
        if (const auto k = v.to_int64()) {
            acc = mul(acc, *k >= 0 ? int_power(base, *k) : int_power(invert(base), -*k));
        } else {
            acc = mul(acc, pow_alpha(base, v));
        }
    }
    return acc;
}

FracSeries RhsSpec::log_series(const Rational &cutoff) const
{
    std::map<Rational, Rational> terms;
    if (variant_ == Variant::poly_over_1mx) {
        add_log_onemx(terms, 1, Rational(-1), cutoff);
        const FracSeries lp = log1p_series(sub(poly_.to_series(cutoff), FracSeries::constant(Rational(1), cutoff)));
        return add(FracSeries(cutoff, terms), lp);
    }
    for (const auto &[d, v] : mexps_) {
        add_log_onemx(terms, d, v, cutoff);
    }
    return FracSeries(cutoff, terms);
}

FracSeries solve_formal(const MSpec &m, const RhsSpec &rhs, const Rational &cutoff, const SolveOptions &opts)
{
    if (m.base() < 2) {
        throw hypothesis_error("solver needs b_0 >= 2");
    }
    if (!cutoff.is_positive()) {
        throw domain_error("cutoff must be positive");
    }
    const Rational b(m.base());
    const Rational inv_e(1, m.base_multiplicity());
    const Rational f_cut = cutoff / b;
    const auto thetas = m.thetas();
    const auto nus = m.nus();
    if (opts.seed) {
        if (opts.seed->cutoff() != f_cut) {
            throw usage_error("seed cutoff must be " + f_cut.to_string());
        }
        if (!opts.seed->constant_term().is_one()) {
            throw domain_error("seed needs constant term 1");
        }
    }
    const int cap = iteration_cap(m, cutoff);
    const FracSeries one = FracSeries::constant(Rational(1), f_cut);

    if (opts.method == SolveMethod::log_iteration) {
        const FracSeries lg = scale(substitute_power(rhs.log_series(cutoff), b.inverse()), inv_e);
        FracSeries l = opts.seed ? log1p_series(sub(*opts.seed, one)) : FracSeries(f_cut);
        for (int it = 1; it <= cap; ++it) {
            FracSeries next = lg;
            for (std::size_t i = 0; i < thetas.size(); ++i) {
                next = sub(next, scale(truncate(substitute_power(l, thetas[i]), f_cut), nus[i]));
            }
            if (next == l) {
                g_last_iterations = it;
                return exp_series(l);
            }
            l = std::move(next);
        }
    } else {
        const FracSeries base = pow_alpha(substitute_power(rhs.expand(cutoff), b.inverse()), inv_e);
        FracSeries f = opts.seed ? *opts.seed : one;
        for (int it = 1; it <= cap; ++it) {
            FracSeries next = base;
            for (std::size_t i = 0; i < thetas.size(); ++i) {
                next = mul(next, pow_alpha(truncate(substitute_power(f, thetas[i]), f_cut), -nus[i]));
            }
            if (next == f) {
                g_last_iterations = it;
                return f;
            }
            f = std::move(next);
        }
    }
    throw domain_error("iteration did not stabilize within " + std::to_string(cap) + " steps");
}

int last_solve_iterations()
{
    return g_last_iterations;
}

bool verify_solution(const FracSeries &f, const MSpec &m, const RhsSpec &rhs)
{
    const Rational t = f.cutoff() * Rational(m.base());
    FracSeries lhs = FracSeries::constant(Rational(1), t);
    for (const auto &pair : m.pairs()) {
        lhs = mul(lhs, int_power(truncate(substitute_power(f, Rational(pair.b)), t), pair.e));
    }
    return lhs == rhs.expand(t);
}

std::vector<Term> integrality_report(const FracSeries &f)
{
    if (!f.constant_term().is_one()) {
        throw domain_error("integrality_report needs f(0) = 1");
    }
    std::vector<Term> out;
    for (const auto &t : f.terms()) {
        if (!t.exponent.is_integer()) {
            out.push_back(t);
        }
    }
    return out;
}

Rational criterion_t3(const MSpec &m, const MExps &mexps, const Rational &lambda)
{
    if (!lambda.is_positive() || !in_qbprime_minus_nprime(lambda, m)) {
        throw domain_error("criterion index " + lambda.to_string() + " lies outside Q_b' - N'");
    }
    CriterionSum s(m, mexps);
    return s(lambda * Rational(m.base()));
}

Rational gd_raw(const MSpec &m, const MExps &mexps, const Rational &d)
{
    if (!d.is_positive()) {
        throw domain_error("g_d needs d > 0");
    }
    CriterionSum s(m, mexps);
    return s(d * Rational(m.base())) / Rational(m.base_multiplicity());
}

Rational gd_formula(const MSpec &m, const MExps &mexps, const Rational &d)
{
    if (!d.is_positive()) {
        throw domain_error("g_d needs d > 0");
    }
    if (!d.is_integer() || !in_nprime(d.numerator(), m)) {
        return Rational();
    }
    return gd_raw(m, mexps, d);
}

std::optional<Witness> hypothesis_check(const MSpec &m)
{
    if (m.m() == 0) {
        throw usage_error("hypothesis check needs at least two coefficients");
    }
    for (const auto &[p, k] : factorize(m.base())) {
        std::int64_t need = 0;
        for (std::size_t i = 1; i < m.size(); ++i) {
            need = std::max(need, ord_p(Rational(m.b(i)), p));
        }
        if (need + 1 <= k) {
            return Witness{p, need + 1};
        }
    }
    return std::nullopt;
}

std::int64_t almost_rational_bound(const MSpec &m, const MExps &mexps, const Witness &w)
{
    validate_witness(m, w);
    std::int64_t s = 0;
    for (const auto &[d, v] : mexps) {
        if (!v.is_zero() && d >= 1 && in_nprime(d, m)) {
            s = std::max(s, d);
        }
    }
    if (s == 0) {
        return 1;
    }
    const std::int64_t b = m.base();
    const std::int64_t ob = ord_p(Rational(b), w.p);
    Rational rho;
    for (std::size_t i = 1; i < m.size(); ++i) {
        const std::int64_t wi = ob - ord_p(Rational(m.b(i)), w.p);
        rho = std::max(rho, m.theta(i) * Rational(w.p).pow(wi));
    }
    // Indices reached from bd are >= min(sqrt(bd), p^{log_rho(bd)/2}); both
    // exceed S once bd > max(S^2, rho^{2 log_p S}).
    Rational v = Rational(s) * Rational(s);
    std::int64_t k = 0;
    std::int64_t ps = 1;
    while (ps < s) {
        ps *= w.p;
        ++k;
    }
    if (ps == s) {
        v = std::max(v, rho.pow(2 * k));
        return (v / Rational(b)).floor().get_si() + 1;
    }
    const double expo = 2.0 * std::log(static_cast<double>(s)) / std::log(static_cast<double>(w.p));
    const double approx = std::pow(rho.to_double(), expo) * (1.0 + 1e-9) + 1e-9;
    const double vmax = std::max(v.to_double(), approx);
    if (!(vmax < 9e15)) {
        throw capacity_error("almost-rational bound exceeds int64");
    }
    return static_cast<std::int64_t>(std::floor(vmax / static_cast<double>(b))) + 1;
}

RecurrenceData recurrence_data(const MSpec &m, const Witness &w)
{
    validate_witness(m, w);
    if (m.gcd_of_bs() != 1) {
        throw hypothesis_error("recurrence needs gcd(b_0, ..., b_m) = 1");
    }
    RecurrenceData out;
    out.p = w.p;
    out.t = ord_p(Rational(m.base()), w.p);
    out.a.assign(static_cast<std::size_t>(out.t) + 1, 0);
    for (const auto &pair : m.pairs()) {
        const std::int64_t j = ord_p(Rational(pair.b), w.p);
        out.a[static_cast<std::size_t>(j)] += pair.e;
    }
    if (out.a.front() == 0) {
        throw hypothesis_error("recurrence needs a_0 != 0 (some b_i coprime to p)");
    }
    for (const auto a : out.a) {
        out.A += a;
        out.d_gcd = std::gcd(out.d_gcd, a);
    }
    return out;
}

Contradiction contradiction_certificate(const RecurrenceData &data)
{
    return Contradiction{data.d_gcd, data.A, data.d_gcd > 0 && data.d_gcd < data.A};
}

const char *verdict_name(Verdict v)
{
    switch (v) {
    case Verdict::impossible_by_theorem:
        return "impossible_by_theorem";
    case Verdict::outside_hypothesis:
        return "outside_hypothesis";
    case Verdict::degenerate_gcd:
        return "degenerate_gcd";
    }
    return "unknown";
}

DecisionReport decide(const MSpec &m, const std::optional<IntPolynomial> &p_poly)
{
    const IntPolynomial p = p_poly.value_or(IntPolynomial::from_ints({1}));
    if (!p.integral() || !p.coeff(0).is_one() || p.eval(Rational(1)).is_zero()) {
        throw precondition_error("P must have integer coefficients, P(0) = 1 and P(1) != 0");
    }
    DecisionReport report;
    report.gcd = m.gcd_of_bs();
    if (m.base() < 2) {
        report.verdict = Verdict::outside_hypothesis;
        return report;
    }
    if (report.gcd > 1) {
        report.verdict = Verdict::degenerate_gcd;
        return report;
    }
    if (const auto w = hypothesis_check(m)) {
        Certificate c;
        c.witness = *w;
        c.h = nprime_cyclotomic_part(p, m, true);
        c.mexps = to_onemx(c.h).exps;
        c.bound = almost_rational_bound(m, c.mexps, *w);
        c.gd_sample_limit = std::clamp<std::int64_t>(2 * c.bound, 1, 64);
        for (std::int64_t d = 1; d <= c.gd_sample_limit; ++d) {
            const Rational g = gd_formula(m, c.mexps, Rational(d));
            if (!g.is_zero()) {
                c.gd_samples.emplace_back(d, g);
            }
        }
        c.recurrence = recurrence_data(m, *w);
        c.contradiction = contradiction_certificate(c.recurrence);
        report.verdict = Verdict::impossible_by_theorem;
        report.certificate = std::move(c);
        return report;
    }
    report.verdict = Verdict::outside_hypothesis;
    IntegralityEvidence ev;
    ev.cutoff = Rational(2 * m.base());
    ev.nonintegral = integrality_report(solve_formal(m, RhsSpec::poly_over_1mx(p), ev.cutoff));
    report.evidence = std::move(ev);
    return report;
}

} // namespace fracpow
