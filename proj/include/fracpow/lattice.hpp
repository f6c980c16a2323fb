#ifndef FRACPOW_LATTICE_HPP
#define FRACPOW_LATTICE_HPP

#include <cstdint>
#include <vector>

#include <fracpow/rational.hpp>

namespace fracpow
{

// Exponent lattice {F(theta_1, ..., theta_m) / b : F has nonnegative integer
// coefficients}.
struct LatticeSpec {
    std::int64_t b = 1;
    std::vector<Rational> thetas;

    LatticeSpec(std::int64_t b, std::vector<Rational> thetas);
};

// All lattice points in [0, bound], ascending. Always contains 0.
std::vector<Rational> enumerate_below(const LatticeSpec &spec, const Rational &bound);

bool contains(const LatticeSpec &spec, const Rational &q);

} // namespace fracpow

#endif
