#include <fracpow/lattice.hpp>

#include <algorithm>
#include <set>

#include <fracpow/error.hpp>

namespace fracpow
{

LatticeSpec::LatticeSpec(std::int64_t b_, std::vector<Rational> thetas_) : b(b_), thetas(std::move(thetas_))
{
    if (b < 1) {
        throw domain_error("lattice base must be positive");
    }
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        if (thetas[i] <= Rational(1)) {
            throw domain_error("lattice generators must exceed 1");
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (thetas[i] == thetas[j]) {
                throw domain_error("lattice generators must be distinct");
            }
        }
    }
}

std::vector<Rational> enumerate_below(const LatticeSpec &spec, const Rational &bound)
{
    if (!bound.is_positive()) {
        throw domain_error("lattice bound must be positive");
    }
    const Rational limit = bound * Rational(spec.b);

    // theta-monomials up to the scaled bound, breadth first.
    std::set<Rational> monomials{Rational(1)};
    std::vector<Rational> frontier{Rational(1)};
    while (!frontier.empty()) {
        std::vector<Rational> next;
        for (const auto &mu : frontier) {
            for (const auto &t : spec.thetas) {
                const Rational v = mu * t;
                if (v <= limit && monomials.insert(v).second) {
                    next.push_back(v);
                }
            }
        }
        frontier = std::move(next);
    }

    // Unbounded knapsack: nonnegative integer combinations of the monomials.
    std::set<Rational> values{Rational(0)};
    for (const auto &mu : monomials) {
        for (auto it = values.begin(); it != values.end(); ++it) {
            const Rational v = *it + mu;
            if (v > limit) {
                break;
            }
            values.insert(v);
        }
    }

    std::vector<Rational> out;
    out.reserve(values.size());
    const Rational inv_b(1, spec.b);
    for (const auto &v : values) {
        out.push_back(v * inv_b);
    }
    return out;
}

bool contains(const LatticeSpec &spec, const Rational &q)
{
    if (q.sign() < 0) {
        throw domain_error("lattice membership needs a nonnegative value");
    }
    if (q.is_zero()) {
        return true;
    }
    const auto pts = enumerate_below(spec, q);
    return std::binary_search(pts.begin(), pts.end(), q);
}

} // namespace fracpow
