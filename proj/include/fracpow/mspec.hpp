#ifndef FRACPOW_MSPEC_HPP
#define FRACPOW_MSPEC_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <fracpow/rational.hpp>

namespace fracpow
{

// The canonical form M = {(b_0,e_0), ..., (b_m,e_m)} of a multilinear form
// b_0(x_{0,1}+...+x_{0,e_0}) + ... + b_m(x_{m,1}+...+x_{m,e_m}).
//
// Validated at construction: 0 < b_0 < b_1 < ... < b_m and every e_i > 0.
// b_0 = 1 is accepted here; operations that need b_0 >= 2 check it themselves.
class MSpec
{
public:
    struct Pair {
        std::int64_t b;
        std::int64_t e;
        friend bool operator==(const Pair &, const Pair &) = default;
    };

    explicit MSpec(std::vector<Pair> pairs);

    // Parses "b0:e0,b1:e1,...", which must already be sorted ascending in b.
    static MSpec parse(std::string_view text);
    std::string to_string() const;

    std::size_t size() const noexcept
    {
        return pairs_.size();
    }
    // Number of pairs beyond (b_0, e_0).
    std::size_t m() const noexcept
    {
        return pairs_.size() - 1;
    }
    const std::vector<Pair> &pairs() const noexcept
    {
        return pairs_;
    }
    std::int64_t b(std::size_t i) const
    {
        return pairs_.at(i).b;
    }
    std::int64_t e(std::size_t i) const
    {
        return pairs_.at(i).e;
    }
    std::int64_t base() const noexcept
    {
        return pairs_.front().b;
    }
    std::int64_t base_multiplicity() const noexcept
    {
        return pairs_.front().e;
    }
    // theta_i = b_i / b_0 and nu_i = e_i / e_0 for i = 1..m.
    Rational theta(std::size_t i) const;
    Rational nu(std::size_t i) const;
    std::vector<Rational> thetas() const;
    std::vector<Rational> nus() const;

    std::int64_t total_multiplicity() const noexcept;
    std::int64_t gcd_of_bs() const noexcept;

    friend bool operator==(const MSpec &, const MSpec &) = default;

private:
    std::vector<Pair> pairs_;
};

} // namespace fracpow

#endif
