#include <fracpow/mspec.hpp>

#include <charconv>
#include <numeric>

#include <fracpow/error.hpp>

namespace fracpow
{

namespace
{

std::int64_t parse_positive(std::string_view s, std::string_view whole)
{
    while (!s.empty() && s.front() == ' ') {
        s.remove_prefix(1);
    }
    while (!s.empty() && s.back() == ' ') {
        s.remove_suffix(1);
    }
    std::int64_t v = 0;
    const auto *end = s.data() + s.size();
    const auto [ptr, ec] = std::from_chars(s.data(), end, v);
    if (s.empty() || ec != std::errc() || ptr != end) {
        throw usage_error("malformed multilinear spec '" + std::string(whole) + "'");
    }
    return v;
}

} // namespace

MSpec::MSpec(std::vector<Pair> pairs) : pairs_(std::move(pairs))
{
    if (pairs_.empty()) {
        throw domain_error("multilinear spec needs at least one pair");
    }
    for (std::size_t i = 0; i < pairs_.size(); ++i) {
        if (pairs_[i].b <= 0 || pairs_[i].e <= 0) {
            throw domain_error("multilinear spec entries must be positive");
        }
        if (i > 0 && pairs_[i].b <= pairs_[i - 1].b) {
            throw domain_error("multilinear spec coefficients must be strictly increasing");
        }
    }
}

MSpec MSpec::parse(std::string_view text)
{
    std::vector<Pair> pairs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto comma = text.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = text.size();
        }
        const auto item = text.substr(pos, comma - pos);
        const auto colon = item.find(':');
        if (colon == std::string_view::npos) {
            throw usage_error("malformed multilinear spec '" + std::string(text) + "'");
        }
        pairs.push_back({parse_positive(item.substr(0, colon), text), parse_positive(item.substr(colon + 1), text)});
        pos = comma + 1;
    }
    try {
        return MSpec(std::move(pairs));
    } catch (const domain_error &e) {
        throw usage_error(std::string(e.what()) + ": '" + std::string(text) + "'");
    }
}

std::string MSpec::to_string() const
{
    std::string out;
    for (const auto &p : pairs_) {
        if (!out.empty()) {
            out += ',';
        }
        out += std::to_string(p.b) + ":" + std::to_string(p.e);
    }
    return out;
}

Rational MSpec::theta(std::size_t i) const
{
    return Rational(b(i), base());
}

Rational MSpec::nu(std::size_t i) const
{
    return Rational(e(i), base_multiplicity());
}

std::vector<Rational> MSpec::thetas() const
{
    std::vector<Rational> out;
    for (std::size_t i = 1; i < pairs_.size(); ++i) {
        out.push_back(theta(i));
    }
    return out;
}

std::vector<Rational> MSpec::nus() const
{
    std::vector<Rational> out;
    for (std::size_t i = 1; i < pairs_.size(); ++i) {
        out.push_back(nu(i));
    }
    return out;
}

std::int64_t MSpec::total_multiplicity() const noexcept
{
    std::int64_t s = 0;
    for (const auto &p : pairs_) {
        s += p.e;
    }
    return s;
}

std::int64_t MSpec::gcd_of_bs() const noexcept
{
    std::int64_t g = 0;
    for (const auto &p : pairs_) {
        g = std::gcd(g, p.b);
    }
    return g;
}

} // namespace fracpow
