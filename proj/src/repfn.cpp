#include <fracpow/repfn.hpp>

#include <algorithm>
#include <istream>
#include <limits>
#include <ostream>
#include <string>

#include <fracpow/error.hpp>
#include <fracpow/frac_series.hpp>
#include <fracpow/kernels.hpp>

namespace fracpow
{

namespace
{

FracSeries indicator_series(const BoundedSet &a, const Rational &cutoff)
{
    std::vector<Term> terms;
    for (const auto x : a.elements) {
        if (Rational(x) > cutoff) {
            break;
        }
        terms.push_back({Rational(x), Rational(1)});
    }
    return FracSeries::from_sorted(cutoff, std::move(terms));
}

FracSeries generating_product(const MSpec &m, const BoundedSet &a, std::int64_t cutoff)
{
    const Rational t(cutoff);
    FracSeries acc = FracSeries::constant(Rational(1), t);
    for (const auto &pair : m.pairs()) {
        const FracSeries f = substitute_power(indicator_series(a, t / Rational(pair.b)), Rational(pair.b));
        for (std::int64_t j = 0; j < pair.e; ++j) {
            acc = mul(acc, f);
        }
    }
    return acc;
}

} // namespace

BoundedSet::BoundedSet(std::vector<std::int64_t> elems, std::int64_t bnd) : elements(std::move(elems)), bound(bnd)
{
    if (bound < 0) {
        throw domain_error("set bound must be nonnegative");
    }
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (!elements.empty() && (elements.front() < 0 || elements.back() > bound)) {
        throw domain_error("set elements must lie in [0, " + std::to_string(bound) + "]");
    }
}

bool BoundedSet::contains(std::int64_t a) const
{
    return std::binary_search(elements.begin(), elements.end(), a);
}

BoundedSet BoundedSet::truncated(std::int64_t new_bound) const
{
    if (new_bound > bound) {
        throw usage_error("cannot extend a bounded set");
    }
    std::vector<std::int64_t> kept(elements.begin(), std::upper_bound(elements.begin(), elements.end(), new_bound));
    return BoundedSet(std::move(kept), new_bound);
}

DigitSet build_digit_set(std::int64_t k, std::int64_t period, std::int64_t bound)
{
    if (k < 2 || period < 1 || bound < 0) {
        throw domain_error("digit set needs k >= 2, period >= 1, bound >= 0");
    }
    std::vector<std::int64_t> places;
    std::int64_t step = 1;
    for (std::int64_t i = 0; i < period; ++i) {
        if (__builtin_mul_overflow(step, k, &step)) {
            step = std::numeric_limits<std::int64_t>::max();
            break;
        }
    }
    for (std::int64_t p = 1; p <= bound;) {
        places.push_back(p);
        if (__builtin_mul_overflow(p, step, &p)) {
            break;
        }
    }
    std::vector<std::int64_t> elems{0};
    for (const auto p : places) {
        const std::size_t n = elems.size();
        for (std::int64_t d = 1; d < k; ++d) {
            for (std::size_t i = 0; i < n; ++i) {
                const std::int64_t v = elems[i] + d * p;
                if (v <= bound) {
                    elems.push_back(v);
                }
            }
        }
    }
    std::sort(elems.begin(), elems.end());
    return DigitSet{k, period, bound, std::move(elems)};
}

std::vector<std::int64_t> count_all(const MSpec &m, const std::vector<std::int64_t> &a, std::int64_t upto)
{
    if (upto < 0) {
        throw domain_error("count range must be nonnegative");
    }
    const auto len = static_cast<std::size_t>(upto) + 1;
    std::vector<std::int64_t> cur(len, 0);
    cur[0] = 1;
    std::vector<std::int64_t> next(len);
    for (const auto &pair : m.pairs()) {
        std::vector<std::size_t> shifts;
        for (const auto x : a) {
            if (x < 0) {
                throw domain_error("set elements must be nonnegative");
            }
            if (x <= upto / pair.b) {
                shifts.push_back(static_cast<std::size_t>(x * pair.b));
            }
        }
        for (std::int64_t j = 0; j < pair.e; ++j) {
            const std::int64_t peak = *std::max_element(cur.begin(), cur.end());
            std::int64_t limit = 0;
            if (__builtin_mul_overflow(peak, static_cast<std::int64_t>(shifts.size()), &limit)) {
                throw capacity_error("representation counts overflow int64");
            }
            std::fill(next.begin(), next.end(), 0);
            for (const auto s : shifts) {
                kernels::add_into(next.data() + s, cur.data(), len - s);
            }
            cur.swap(next);
        }
    }
    return cur;
}

std::int64_t count_representations(const MSpec &m, const std::vector<std::int64_t> &a, std::int64_t n)
{
    return count_all(m, a, n).back();
}

CountReport constancy_scan(const MSpec &m, const BoundedSet &a, std::int64_t upto)
{
    const std::int64_t safe = safe_bound(m, a);
    if (upto > safe) {
        throw usage_error("scan limit " + std::to_string(upto) + " exceeds the safe bound " + std::to_string(safe));
    }
    CountReport report;
    report.safe_bound = safe;
    report.values = count_all(m, a.elements, upto);
    std::size_t n0 = report.values.size() - 1;
    while (n0 > 0 && report.values[n0 - 1] == report.values.back()) {
        --n0;
    }
    if (static_cast<std::int64_t>(n0) < upto) {
        report.constant_from = static_cast<std::int64_t>(n0);
    }
    return report;
}

std::optional<std::int64_t> generating_mismatch(const MSpec &m, const BoundedSet &a,
                                                const std::vector<std::int64_t> &counts)
{
    if (counts.empty()) {
        return std::nullopt;
    }
    const auto cutoff = static_cast<std::int64_t>(counts.size()) - 1;
    const FracSeries g = generating_product(m, a, cutoff);
    for (std::int64_t n = 0; n <= cutoff; ++n) {
        if (g.coeff(Rational(n)) != Rational(counts[static_cast<std::size_t>(n)])) {
            return n;
        }
    }
    return std::nullopt;
}

bool generating_check(const MSpec &m, const BoundedSet &a, std::int64_t cutoff)
{
    const std::int64_t safe = safe_bound(m, a);
    if (cutoff > safe) {
        throw usage_error("cutoff " + std::to_string(cutoff) + " exceeds the safe bound " + std::to_string(safe));
    }
    return !generating_mismatch(m, a, count_all(m, a.elements, cutoff)).has_value();
}

std::vector<ParityEntry> parity_check(const BoundedSet &a, std::int64_t upto)
{
    if (upto > a.bound) {
        throw usage_error("parity scan limit " + std::to_string(upto) + " exceeds the safe bound " +
                          std::to_string(a.bound));
    }
    const auto r = count_all(MSpec({{1, 2}}), a.elements, upto);
    std::vector<ParityEntry> out;
    for (std::int64_t n = 0; n <= upto; ++n) {
        ParityEntry e;
        e.n = n;
        e.r = r[static_cast<std::size_t>(n)];
        e.is_double = n % 2 == 0 && a.contains(n / 2);
        e.consistent = (e.r % 2 == 1) == e.is_double;
        out.push_back(e);
    }
    return out;
}

std::int64_t unordered_pair_count(const BoundedSet &a, std::int64_t n)
{
    if (n > a.bound) {
        throw usage_error("n exceeds the safe bound " + std::to_string(a.bound));
    }
    const std::int64_t r = count_representations(MSpec({{1, 2}}), a.elements, n);
    const bool twice = n % 2 == 0 && a.contains(n / 2);
    return (r + (twice ? 1 : 0)) / 2;
}

BoundedSet read_set_file(std::istream &in)
{
    std::string line;
    std::optional<std::int64_t> bound;
    std::vector<std::int64_t> elems;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        line = line.substr(first, line.find_last_not_of(" \t\r") - first + 1);
        const auto where = " at line " + std::to_string(lineno);
        if (line[0] == '#') {
            const std::string key = "# bound=";
            if (line.rfind(key, 0) == 0 && !bound) {
                try {
                    std::size_t used = 0;
                    bound = std::stoll(line.substr(key.size()), &used);
                    if (used != line.size() - key.size()) {
                        throw usage_error("");
                    }
                } catch (const std::exception &) {
                    throw usage_error("malformed bound header" + where);
                }
            }
            continue;
        }
        if (!bound) {
            throw usage_error("set file needs a '# bound=X' header before its elements");
        }
        std::int64_t v = 0;
        try {
            std::size_t used = 0;
            v = std::stoll(line, &used);
            if (used != line.size()) {
                throw usage_error("");
            }
        } catch (const std::exception &) {
            throw usage_error("not an integer" + where + ": '" + line + "'");
        }
        if (!elems.empty() && v <= elems.back()) {
            throw usage_error("set file must be strictly ascending" + where);
        }
        elems.push_back(v);
    }
    if (!bound) {
        throw usage_error("set file needs a '# bound=X' header");
    }
    try {
        return BoundedSet(std::move(elems), *bound);
    } catch (const domain_error &e) {
        throw usage_error(e.what());
    }
}

void write_set_file(std::ostream &out, const BoundedSet &a)
{
    out << "# bound=" << a.bound << '\n';
    for (const auto x : a.elements) {
        out << x << '\n';
    }
}

} // namespace fracpow
