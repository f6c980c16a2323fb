#include <fracpow/polynomial.hpp>

#include <cctype>

#include <fracpow/error.hpp>

namespace fracpow
{

IntPolynomial::IntPolynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    trim();
}

IntPolynomial IntPolynomial::from_ints(const std::vector<long> &coeffs)
{
    std::vector<Rational> v;
    v.reserve(coeffs.size());
    for (long c : coeffs) {
        v.emplace_back(c);
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial IntPolynomial::monomial(const Rational &c, std::size_t degree)
{
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return IntPolynomial(std::move(v));
}

void IntPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

IntPolynomial IntPolynomial::parse(std::string_view text)
{
    std::string s;
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) {
            s += ch;
        }
    }
    if (s.empty()) {
        throw usage_error("empty polynomial");
    }
    auto bad = [&] { return usage_error("malformed polynomial '" + std::string(text) + "'"); };
    std::vector<Rational> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        bool negative = false;
        if (s[pos] == '+' || s[pos] == '-') {
            negative = s[pos] == '-';
            ++pos;
        } else if (pos != 0) {
            throw bad();
        }
        std::size_t end = pos;
        while (end < s.size() && s[end] != '+' && s[end] != '-') {
            ++end;
        }
        const std::string term = s.substr(pos, end - pos);
        if (term.empty()) {
            throw bad();
        }
        Rational c(1);
        std::size_t degree = 0;
        const auto xpos = term.find('x');
        if (xpos == std::string::npos) {
            c = Rational::parse(term);
        } else {
            std::string head = term.substr(0, xpos);
            if (!head.empty() && head.back() == '*') {
                head.pop_back();
                if (head.empty()) {
                    throw bad();
                }
            }
            if (!head.empty()) {
                c = Rational::parse(head);
            }
            const std::string tail = term.substr(xpos + 1);
            if (tail.empty()) {
                degree = 1;
            } else {
                if (tail[0] != '^' || tail.size() < 2) {
                    throw bad();
                }
                for (std::size_t i = 1; i < tail.size(); ++i) {
                    if (!std::isdigit(static_cast<unsigned char>(tail[i]))) {
                        throw bad();
                    }
                }
                degree = std::stoul(tail.substr(1));
                if (degree > 1'000'000) {
                    throw usage_error("polynomial degree too large");
                }
            }
        }
        if (coeffs.size() <= degree) {
            coeffs.resize(degree + 1);
        }
        coeffs[degree] += negative ? -c : c;
        pos = end;
    }
    return IntPolynomial(std::move(coeffs));
}

std::string IntPolynomial::to_string() const
{
    if (coeffs_.empty()) {
        return "0";
    }
    std::string out;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        const Rational &c = coeffs_[k];
        if (c.is_zero()) {
            continue;
        }
        const Rational mag = c.abs();
        std::string body;
        if (k == 0) {
            body = mag.to_string();
        } else {
            body = mag.is_one() ? "x" : mag.to_string() + "*x";
            if (k > 1) {
                body += "^" + std::to_string(k);
            }
        }
        if (out.empty()) {
            out = c.sign() < 0 ? "-" + body : body;
        } else {
            out += c.sign() < 0 ? " - " : " + ";
            out += body;
        }
    }
    return out;
}

Rational IntPolynomial::coeff(std::size_t i) const
{
    return i < coeffs_.size() ? coeffs_[i] : Rational();
}

bool IntPolynomial::integral() const
{
    for (const auto &c : coeffs_) {
        if (!c.is_integer()) {
            return false;
        }
    }
    return true;
}

Rational IntPolynomial::eval(const Rational &x) const
{
    Rational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

IntPolynomial IntPolynomial::substitute(std::size_t a) const
{
    if (a == 0) {
        throw domain_error("substitution power must be positive");
    }
    if (coeffs_.empty()) {
        return {};
    }
    std::vector<Rational> v((coeffs_.size() - 1) * a + 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        v[i * a] = coeffs_[i];
    }
    return IntPolynomial(std::move(v));
}

FracSeries IntPolynomial::to_series(const Rational &cutoff) const
{
    std::vector<Term> terms;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (!coeffs_[i].is_zero()) {
            terms.push_back({Rational(static_cast<long>(i)), coeffs_[i]});
        }
    }
    return FracSeries(cutoff, std::move(terms));
}

IntPolynomial operator+(const IntPolynomial &a, const IntPolynomial &b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        v[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        v[i] += b.coeffs_[i];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator-(const IntPolynomial &a, const IntPolynomial &b)
{
    std::vector<Rational> v(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        v[i] += a.coeffs_[i];
    }
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) {
        v[i] -= b.coeffs_[i];
    }
    return IntPolynomial(std::move(v));
}

IntPolynomial operator*(const IntPolynomial &a, const IntPolynomial &b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<Rational> v(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            v[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPolynomial(std::move(v));
}

std::pair<IntPolynomial, IntPolynomial> divmod(const IntPolynomial &a, const IntPolynomial &b)
{
    if (b.is_zero()) {
        throw domain_error("polynomial division by zero");
    }
    std::vector<Rational> rem = a.coeffs();
    const auto db = static_cast<std::size_t>(b.degree());
    if (rem.size() <= db) {
        return {IntPolynomial(), a};
    }
    std::vector<Rational> quot(rem.size() - db);
    const Rational lead_inv = b.coeffs().back().inverse();
    for (std::size_t k = rem.size(); k-- > db;) {
        if (rem[k].is_zero()) {
            continue;
        }
        const Rational q = rem[k] * lead_inv;
        quot[k - db] = q;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] -= q * b.coeffs()[j];
        }
    }
    return {IntPolynomial(std::move(quot)), IntPolynomial(std::move(rem))};
}

IntPolynomial gcd(IntPolynomial a, IntPolynomial b)
{
    while (!b.is_zero()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) {
        return a;
    }
    const Rational lead_inv = a.coeffs().back().inverse();
    std::vector<Rational> v = a.coeffs();
    for (auto &c : v) {
        c *= lead_inv;
    }
    return IntPolynomial(std::move(v));
}

Rational content(const IntPolynomial &p)
{
    if (p.is_zero()) {
        throw domain_error("content of the zero polynomial");
    }
    BigInt g = 0;
    BigInt l = 1;
    for (const auto &c : p.coeffs()) {
        if (c.is_zero()) {
            continue;
        }
        const BigInt n = abs(c.numerator());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
        const BigInt d = c.denominator();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    return Rational(g, l);
}

} // namespace fracpow
