#ifndef FRACPOW_CYCLOTOMIC_HPP
#define FRACPOW_CYCLOTOMIC_HPP

#include <cstdint>
#include <map>

#include <fracpow/frac_series.hpp>
#include <fracpow/mspec.hpp>
#include <fracpow/polynomial.hpp>
#include <fracpow/rational.hpp>

namespace fracpow
{

// prod_d Phi_d(x)^{exps[d]} (phi basis) or prod_d (1 - x^d)^{exps[d]}
// (onemx basis). Zero exponents are never stored.
struct CycloProduct {
    enum class Basis { phi, onemx };

    Basis basis = Basis::phi;
    std::map<std::int64_t, Rational> exps;

    CycloProduct() = default;
    CycloProduct(Basis b, std::map<std::int64_t, Rational> e);

    Rational at(std::int64_t d) const;
    void accumulate(std::int64_t d, const Rational &v);
    bool empty() const noexcept
    {
        return exps.empty();
    }

    friend bool operator==(const CycloProduct &, const CycloProduct &) = default;
};

const char *basis_name(CycloProduct::Basis b);

// Phi_n with constant term 1 (so Phi_1 = 1 - x).
IntPolynomial cyclotomic_poly(std::int64_t n);

// 1 - x^n = prod_{d | n} Phi_d.
CycloProduct onemxn_factor(std::int64_t n);

// Phi_n = prod_{d | n} (1 - x^d)^{mu(n/d)}.
CycloProduct phi_as_onemx(std::int64_t n);

// Phi_d(x^a) = prod over d<a|d) | f | ad of Phi_f.
CycloProduct expand_phi_power(std::int64_t d, std::int64_t a);

// g(x^a) for g in the phi basis.
CycloProduct substitute_cyclo(const CycloProduct &g, std::int64_t a);

// prod_i g(x^{b_i})^{e_i}; the exponent of Phi_d is sum_i e_i h_{[d/b_i]}.
CycloProduct apply_mform(const CycloProduct &g, const MSpec &m);

// Change of basis between phi and onemx.
CycloProduct to_onemx(const CycloProduct &g);
CycloProduct to_phi(const CycloProduct &g);

// Exact polynomial product; requires nonnegative integer exponents.
IntPolynomial expand_polynomial(const CycloProduct &g);

// Series expansion to the cutoff; any rational exponents.
FracSeries expand_series(const CycloProduct &g, const Rational &cutoff);

struct CyclotomicFactorization {
    CycloProduct part;     // phi basis, keys in N'
    IntPolynomial residual; // p / prod Phi_d^{c_d}
};

// Multiplicity of Phi_d in p for each d in N' by repeated exact division.
// With include_1mx_inverse the factor 1/(1 - x) is folded in at d = 1.
// Requires integer coefficients, p(0) = 1 and p(1) != 0.
CyclotomicFactorization nprime_cyclotomic_factorization(const IntPolynomial &p, const MSpec &m,
                                                        bool include_1mx_inverse);
CycloProduct nprime_cyclotomic_part(const IntPolynomial &p, const MSpec &m, bool include_1mx_inverse);

} // namespace fracpow

#endif
