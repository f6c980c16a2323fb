#ifndef FRACPOW_REPFN_HPP
#define FRACPOW_REPFN_HPP

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

#include <fracpow/mspec.hpp>

namespace fracpow
{

// Finite prefix A ∩ [0, bound] of a set of nonnegative integers. Counts of
// b_0 a_1 + ... are exact only for n <= b_0 * bound.
struct BoundedSet {
    std::vector<std::int64_t> elements; // strictly ascending, within [0, bound]
    std::int64_t bound = 0;

    BoundedSet() = default;
    // Sorts and deduplicates; throws domain_error on negative or out-of-bound elements.
    BoundedSet(std::vector<std::int64_t> elements, std::int64_t bound);

    bool contains(std::int64_t a) const;
    // The same set cut down to [0, new_bound].
    BoundedSet truncated(std::int64_t new_bound) const;
};

// Sums of eps_i k^{period i} with eps_i in {0, ..., k - 1}, up to bound.
struct DigitSet {
    std::int64_t k = 2;
    std::int64_t period = 1;
    std::int64_t bound = 0;
    std::vector<std::int64_t> elements;

    BoundedSet as_bounded() const
    {
        return BoundedSet(elements, bound);
    }
};

DigitSet build_digit_set(std::int64_t k, std::int64_t period, std::int64_t bound);

// r_M(n) for n = 0 ... upto: ordered tuples with sum b_i (a_{i,1} + ... + a_{i,e_i}) = n,
// taking elements from the list as given. Throws capacity_error on int64 overflow.
std::vector<std::int64_t> count_all(const MSpec &m, const std::vector<std::int64_t> &a, std::int64_t upto);

std::int64_t count_representations(const MSpec &m, const std::vector<std::int64_t> &a, std::int64_t n);

struct CountReport {
    std::vector<std::int64_t> values; // r(0) ... r(N)
    std::optional<std::int64_t> constant_from;
    std::int64_t safe_bound = 0;
};

inline std::int64_t safe_bound(const MSpec &m, const BoundedSet &a)
{
    return m.base() * a.bound;
}

// constant_from is the least n0 < N with r constant on [n0, N].
// Throws usage_error when N exceeds b_0 * X.
CountReport constancy_scan(const MSpec &m, const BoundedSet &a, std::int64_t upto);

// Coefficients of prod f_A(x^{b_i})^{e_i} against the counts, for n <= cutoff.
// Throws usage_error when cutoff exceeds b_0 * X.
bool generating_check(const MSpec &m, const BoundedSet &a, std::int64_t cutoff);

// First n at which the series built from `a` disagrees with `counts`.
std::optional<std::int64_t> generating_mismatch(const MSpec &m, const BoundedSet &a,
                                                const std::vector<std::int64_t> &counts);

struct ParityEntry {
    std::int64_t n = 0;
    std::int64_t r = 0;      // ordered count for a + a' = n
    bool is_double = false;  // n = 2a for some a in A
    bool consistent = false; // r odd iff is_double
};

// Requires upto <= X.
std::vector<ParityEntry> parity_check(const BoundedSet &a, std::int64_t upto);

// Unordered pairs {a, a'} with a + a' = n.
std::int64_t unordered_pair_count(const BoundedSet &a, std::int64_t n);

// One integer per line, ascending, after a "# bound=X" header line.
BoundedSet read_set_file(std::istream &in);
void write_set_file(std::ostream &out, const BoundedSet &a);

} // namespace fracpow

#endif
