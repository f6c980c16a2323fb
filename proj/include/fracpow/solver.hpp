#ifndef FRACPOW_SOLVER_HPP
#define FRACPOW_SOLVER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include <fracpow/cyclotomic.hpp>
#include <fracpow/frac_series.hpp>
#include <fracpow/mspec.hpp>
#include <fracpow/polynomial.hpp>
#include <fracpow/rational.hpp>

namespace fracpow
{

// Exponents m_d of prod (1 - x^d)^{m_d}.
using MExps = std::map<std::int64_t, Rational>;

// Right-hand side G(x) of f(x^{b_0})^{e_0} ... f(x^{b_m})^{e_m} = G(x):
// either P(x) / (1 - x) or prod_d (1 - x^d)^{m_d}.
class RhsSpec
{
public:
    enum class Variant { poly_over_1mx, onemx_product };

    // Requires P(0) = 1 and P(1) != 0.
    static RhsSpec poly_over_1mx(IntPolynomial p);
    static RhsSpec onemx_product(MExps mexps);

    Variant variant() const noexcept
    {
        return variant_;
    }
    const IntPolynomial &poly() const noexcept
    {
        return poly_;
    }
    const MExps &mexps() const noexcept
    {
        return mexps_;
    }

    // G(x) to the cutoff by direct products of its factors.
    FracSeries expand(const Rational &cutoff) const;
    // log G(x) to the cutoff.
    FracSeries log_series(const Rational &cutoff) const;

private:
    RhsSpec() = default;
    Variant variant_ = Variant::onemx_product;
    IntPolynomial poly_;
    MExps mexps_;
};

enum class SolveMethod {
    // Iterate L = (1/e) log G(x^{1/b}) - sum nu_i L(x^{theta_i}) on log f.
    log_iteration,
    // Iterate f = G(x^{1/b})^{1/e} prod f(x^{theta_i})^{-nu_i} directly.
    direct_iteration,
};

struct SolveOptions {
    SolveMethod method = SolveMethod::log_iteration;
    // Starting iterate; must have constant term 1 and cutoff cutoff / b_0.
    std::optional<FracSeries> seed;
};

// The unique f with f(0) = 1 solving the equation with G = rhs up to x^cutoff.
// The returned series has cutoff `cutoff / b_0`.
FracSeries solve_formal(const MSpec &m, const RhsSpec &rhs, const Rational &cutoff, const SolveOptions &opts = {});

// Number of iterations the last solve_formal call on this thread performed.
int last_solve_iterations();

// prod f(x^{b_i})^{e_i} == G up to b_0 * f.cutoff().
bool verify_solution(const FracSeries &f, const MSpec &m, const RhsSpec &rhs);

// Terms whose exponent is not a nonnegative integer. Requires f(0) = 1.
std::vector<Term> integrality_report(const FracSeries &f);

// sum_k (-1)^k sum_{i_1..i_k} nu_{i_1}...nu_{i_k} m_{b lambda / (theta_{i_1}...theta_{i_k})}
// for lambda in Q_b' - N'. Keys of mexps outside N' are treated as zero.
Rational criterion_t3(const MSpec &m, const MExps &mexps, const Rational &lambda);

// (1/e) sum_k (-1)^k sum nu...nu m_{b d / (theta...theta)} for any d > 0,
// without the g_d = 0 convention off N'.
Rational gd_raw(const MSpec &m, const MExps &mexps, const Rational &d);

// gd_raw on N', zero elsewhere.
Rational gd_formula(const MSpec &m, const MExps &mexps, const Rational &d);

struct Witness {
    std::int64_t p = 0;
    std::int64_t t = 0;
    friend bool operator==(const Witness &, const Witness &) = default;
};

// Smallest prime p, then smallest t, with p^t | b_0 and p^t not dividing any
// b_i for i >= 1. Such a witness also gives ord_p(b_0) > ord_p(b_i) for all i.
std::optional<Witness> hypothesis_check(const MSpec &m);

// D* with gd_formula(m, mexps, d) = 0 for every d >= D*.
std::int64_t almost_rational_bound(const MSpec &m, const MExps &mexps, const Witness &w);

struct RecurrenceData {
    std::int64_t p = 0;
    std::int64_t t = 0;
    std::vector<std::int64_t> a; // a_0 ... a_t
    std::int64_t A = 0;
    std::int64_t d_gcd = 0;
    friend bool operator==(const RecurrenceData &, const RecurrenceData &) = default;
};

// a_j = sum of e_i over i with ord_p(b_i) = j, for j = 0 ... ord_p(b_0).
// Requires gcd(b_0, ..., b_m) = 1 and a_0 != 0.
RecurrenceData recurrence_data(const MSpec &m, const Witness &w);

struct Contradiction {
    std::int64_t d_gcd = 0;
    std::int64_t A = 0;
    bool holds = false;
};

Contradiction contradiction_certificate(const RecurrenceData &data);

enum class Verdict { impossible_by_theorem, outside_hypothesis, degenerate_gcd };

const char *verdict_name(Verdict v);

struct Certificate {
    Witness witness;
    CycloProduct h;   // phi basis, c_1 = -1 from the 1/(1 - x) factor
    MExps mexps;      // the same H in the onemx basis
    std::vector<std::pair<std::int64_t, Rational>> gd_samples;
    std::int64_t gd_sample_limit = 0;
    std::int64_t bound = 0; // D*
    RecurrenceData recurrence;
    Contradiction contradiction;
};

struct IntegralityEvidence {
    Rational cutoff; // on the equation's scale
    std::vector<Term> nonintegral;
};

struct DecisionReport {
    Verdict verdict = Verdict::outside_hypothesis;
    std::int64_t gcd = 0;
    std::optional<Certificate> certificate;
    std::optional<IntegralityEvidence> evidence;
};

DecisionReport decide(const MSpec &m, const std::optional<IntPolynomial> &p_poly = std::nullopt);

} // namespace fracpow

#endif
