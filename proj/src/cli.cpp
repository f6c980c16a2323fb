#include <fracpow/cli.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include <fracpow/cyclotomic.hpp>
#include <fracpow/error.hpp>
#include <fracpow/lattice.hpp>
#include <fracpow/repfn.hpp>
#include <fracpow/solver.hpp>

#include "json_io.hpp"

namespace fracpow::cli
{

namespace
{

using json_io::json;
using json_io::to_json;

enum class Format { text, json };

template <class F> auto as_usage(const std::string &flag, F &&f)
{
    try {
        return f();
    } catch (const usage_error &) {
        throw;
    } catch (const error &e) {
        throw usage_error(flag + ": " + e.what());
    }
}

Rational rational_flag(const std::string &flag, const std::string &text)
{
    return as_usage(flag, [&] { return Rational::parse(text); });
}

MSpec mspec_flag(const std::string &text)
{
    return as_usage("--m", [&] { return MSpec::parse(text); });
}

IntPolynomial poly_flag(const std::string &flag, const std::string &text)
{
    return as_usage(flag, [&] { return IntPolynomial::parse(text); });
}

std::vector<Rational> rational_list_flag(const std::string &flag, const std::string &text)
{
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(rational_flag(flag, item));
    }
    if (out.empty()) {
        throw usage_error(flag + ": empty list");
    }
    return out;
}

void emit(std::ostream &out, Format fmt, const json &j, const std::string &text)
{
    if (fmt == Format::json) {
        out << j.dump() << '\n';
    } else {
        out << text;
    }
}

std::string terms_text(const std::vector<Term> &terms)
{
    std::ostringstream os;
    for (const auto &t : terms) {
        os << t.exponent.to_string() << '\t' << t.coeff.to_string() << '\n';
    }
    return os.str();
}

std::string exps_text(const CycloProduct &g)
{
    std::ostringstream os;
    os << "basis " << basis_name(g.basis) << '\n';
    for (const auto &[d, v] : g.exps) {
        os << d << '\t' << v.to_string() << '\n';
    }
    return os.str();
}

std::string decision_text(const DecisionReport &r)
{
    std::ostringstream os;
    os << "verdict " << verdict_name(r.verdict) << '\n' << "gcd " << r.gcd << '\n';
    if (r.certificate) {
        const auto &c = *r.certificate;
        os << "witness p=" << c.witness.p << " t=" << c.witness.t << '\n';
        os << "bound " << c.bound << '\n';
        os << "recurrence a =";
        for (auto a : c.recurrence.a) {
            os << ' ' << a;
        }
        os << '\n';
        os << "contradiction d_gcd=" << c.contradiction.d_gcd << " A=" << c.contradiction.A
           << (c.contradiction.holds ? " holds" : " fails") << '\n';
        for (const auto &[d, g] : c.gd_samples) {
            os << "g_" << d << " = " << g.to_string() << '\n';
        }
    }
    if (r.evidence) {
        os << "nonintegral terms below " << r.evidence->cutoff.to_string() << ": " << r.evidence->nonintegral.size()
           << '\n';
    }
    return os.str();
}

struct Options {
    std::string format = "json";
    std::string m;
    std::string rhs_poly = "1";
    std::string cutoff;
    std::string set_file;
    std::int64_t upto = -1;
    std::string kind;
    std::int64_t k = 0;
    std::int64_t period = 0;
    std::int64_t bound = -1;
    std::int64_t n = 0;
    std::int64_t d = 0;
    std::int64_t a = 0;
    std::string poly;
    bool include_1mx = false;
    std::int64_t b = 0;
    std::string thetas;
    std::string below;
};

int dispatch(CLI::App &app, const Options &o, std::ostream &out)
{
    const Format fmt = o.format == "json" ? Format::json : Format::text;
    auto *solve = app.get_subcommand("solve");
    auto *decide_cmd = app.get_subcommand("decide");
    auto *count = app.get_subcommand("count");
    auto *construct = app.get_subcommand("construct");
    auto *cyclo = app.get_subcommand("cyclo");
    auto *enumerate = app.get_subcommand("enumerate");
    auto *tau = app.get_subcommand("tau");

    if (solve->parsed()) {
        const MSpec m = mspec_flag(o.m);
        const Rational cutoff = rational_flag("--cutoff", o.cutoff);
        if (!cutoff.is_positive()) {
            throw usage_error("--cutoff must be positive");
        }
        const auto rhs = RhsSpec::poly_over_1mx(poly_flag("--rhs-poly", o.rhs_poly));
        const auto f = solve_formal(m, rhs, cutoff);
        const bool ok = verify_solution(f, m, rhs);
        json j = to_json(f);
        j["verified"] = ok;
        j["nonintegral"] = to_json(integrality_report(f));
        emit(out, fmt, j, "cutoff " + f.cutoff().to_string() + "\nverified " + (ok ? "true" : "false") + "\n" +
                              terms_text(f.terms()));
        return k_exit_ok;
    }
    if (decide_cmd->parsed()) {
        const MSpec m = mspec_flag(o.m);
        std::optional<IntPolynomial> p;
        if (decide_cmd->count("--rhs-poly") > 0) {
            p = poly_flag("--rhs-poly", o.rhs_poly);
        }
        const auto r = decide(m, p);
        emit(out, fmt, to_json(r), decision_text(r));
        return k_exit_ok;
    }
    if (count->parsed()) {
        const MSpec m = mspec_flag(o.m);
        std::ifstream in(o.set_file);
        if (!in) {
            throw usage_error("cannot open set file '" + o.set_file + "'");
        }
        const auto set = read_set_file(in);
        if (o.upto < 0) {
            throw usage_error("--upto must be nonnegative");
        }
        const auto r = constancy_scan(m, set, o.upto);
        std::ostringstream os;
        os << "safe_bound " << r.safe_bound << '\n';
        os << "constant_from " << (r.constant_from ? std::to_string(*r.constant_from) : "none") << '\n';
        for (std::size_t n = 0; n < r.values.size(); ++n) {
            os << n << '\t' << r.values[n] << '\n';
        }
        emit(out, fmt, to_json(r), os.str());
        return k_exit_ok;
    }
    if (construct->parsed()) {
        std::int64_t k = o.k;
        std::int64_t period = o.period;
        if (o.kind == "ruzsa") {
            if ((k != 0 && k != 2) || (period != 0 && period != 2)) {
                throw usage_error("ruzsa fixes --k 2 --period 2");
            }
            k = 2;
            period = 2;
        } else if (o.kind == "moser") {
            if (period != 0 && period != 2) {
                throw usage_error("moser fixes --period 2");
            }
            k = k == 0 ? 2 : k;
            period = 2;
        } else if (k == 0 || period == 0) {
            throw usage_error("digit sets need --k and --period");
        }
        if (o.bound < 0) {
            throw usage_error("--bound must be nonnegative");
        }
        const auto set = as_usage("construct", [&] { return build_digit_set(k, period, o.bound); }).as_bounded();
        std::ostringstream os;
        write_set_file(os, set);
        emit(out, fmt, json{{"bound", set.bound}, {"elements", set.elements}}, os.str());
        return k_exit_ok;
    }
    if (cyclo->parsed()) {
        if (cyclo->get_subcommand("phi")->parsed()) {
            if (o.n < 1) {
                throw usage_error("cyclo phi needs N >= 1");
            }
            const auto p = cyclotomic_poly(o.n);
            emit(out, fmt, json{{"n", o.n}, {"poly", p.to_string()}}, p.to_string() + "\n");
            return k_exit_ok;
        }
        if (cyclo->get_subcommand("expand")->parsed()) {
            if (o.d < 1 || o.a < 1) {
                throw usage_error("cyclo expand needs D >= 1 and A >= 1");
            }
            const auto g = expand_phi_power(o.d, o.a);
            emit(out, fmt, to_json(g), exps_text(g));
            return k_exit_ok;
        }
        const auto p = poly_flag("--poly", o.poly);
        const MSpec m = mspec_flag(o.m);
        const auto f = nprime_cyclotomic_factorization(p, m, o.include_1mx);
        json j{{"part", to_json(f.part)}, {"residual", f.residual.to_string()}};
        emit(out, fmt, j, exps_text(f.part) + "residual " + f.residual.to_string() + "\n");
        return k_exit_ok;
    }
    if (enumerate->parsed()) {
        const auto thetas = rational_list_flag("--thetas", o.thetas);
        const Rational below = rational_flag("--below", o.below);
        const LatticeSpec spec = as_usage("enumerate", [&] { return LatticeSpec(o.b, thetas); });
        const auto pts = enumerate_below(spec, below);
        json arr = json::array();
        std::ostringstream os;
        for (const auto &q : pts) {
            arr.push_back(q.to_string());
            os << q.to_string() << '\n';
        }
        emit(out, fmt, json{{"b", o.b}, {"below", below.to_string()}, {"points", arr}}, os.str());
        return k_exit_ok;
    }
    if (tau->parsed()) {
        if (o.upto < 1) {
            throw usage_error("--upto must be at least 1");
        }
        // sum tau(n) x^n = x prod (1 - x^n)^24
        std::map<std::int64_t, Rational> exps;
        for (std::int64_t n = 1; n < o.upto; ++n) {
            exps[n] = Rational(24);
        }
        const auto delta = onemx_product_series(exps, Rational(std::max<std::int64_t>(o.upto - 1, 1)));
        json arr = json::array();
        std::ostringstream os;
        for (std::int64_t n = 1; n <= o.upto; ++n) {
            const auto v = delta.coeff(Rational(n - 1)).to_string();
            arr.push_back(json::array({n, v}));
            os << n << '\t' << v << '\n';
        }
        emit(out, fmt, json{{"tau", arr}}, os.str());
        return k_exit_ok;
    }
    throw usage_error("missing subcommand");
}

void report_error(std::ostream &err, const std::string &kind, const std::string &message)
{
    err << json{{"error", json{{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    CLI::App app{"Exact fractional power series and representation-function tools", "fracpow"};
    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    app.require_subcommand(1);

    auto *solve = app.add_subcommand("solve", "Solve prod f(x^{b_i})^{e_i} = P(x) / (1 - x)");
    solve->add_option("--m", o.m, "Spec b0:e0,b1:e1,...")->required();
    solve->add_option("--rhs-poly", o.rhs_poly, "P(x), default 1");
    solve->add_option("--cutoff", o.cutoff, "Cutoff on the x scale")->required();

    auto *decide_cmd = app.add_subcommand("decide", "Decide constancy of r_M with A's generating function");
    decide_cmd->add_option("--m", o.m)->required();
    decide_cmd->add_option("--rhs-poly", o.rhs_poly);

    auto *count = app.add_subcommand("count", "Representation counts on a bounded set");
    count->add_option("--m", o.m)->required();
    count->add_option("--set", o.set_file, "Set file with a '# bound=X' header")->required();
    count->add_option("--upto", o.upto)->required();

    auto *construct = app.add_subcommand("construct", "Write a digit set as a set file");
    construct->add_option("--kind", o.kind)->required()->check(CLI::IsMember({"ruzsa", "moser", "digit"}));
    construct->add_option("--k", o.k);
    construct->add_option("--period", o.period);
    construct->add_option("--bound", o.bound)->required();

    auto *cyclo = app.add_subcommand("cyclo", "Cyclotomic polynomials");
    cyclo->require_subcommand(1);
    cyclo->add_subcommand("phi", "Phi_N")->add_option("N", o.n)->required();
    auto *expand = cyclo->add_subcommand("expand", "Phi_D(x^A) as a product of Phi_f");
    expand->add_option("D", o.d)->required();
    expand->add_option("A", o.a)->required();
    auto *part = cyclo->add_subcommand("part", "N'-cyclotomic part of a polynomial");
    part->add_option("--poly", o.poly)->required();
    part->add_option("--m", o.m)->required();
    part->add_flag("--include-1mx", o.include_1mx, "Fold in 1 / (1 - x)");

    auto *enumerate = app.add_subcommand("enumerate", "Exponent lattice points");
    enumerate->add_option("--b", o.b)->required();
    enumerate->add_option("--thetas", o.thetas, "Comma list of rationals")->required();
    enumerate->add_option("--below", o.below)->required();

    app.add_subcommand("tau", "Ramanujan tau(1..N)")->add_option("--upto", o.upto)->required();

    std::vector<const char *> argv{"fracpow"};
    for (const auto &s : args) {
        argv.push_back(s.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return k_exit_ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return k_exit_ok;
    } catch (const CLI::ParseError &e) {
        report_error(err, "usage_error", e.what());
        return k_exit_usage;
    }

    std::ostringstream buffer;
    try {
        const int code = dispatch(app, o, buffer);
        out << buffer.str();
        return code;
    } catch (const usage_error &e) {
        report_error(err, e.kind(), e.what());
        return k_exit_usage;
    } catch (const error &e) {
        report_error(err, e.kind(), e.what());
        return k_exit_domain;
    } catch (const std::exception &e) {
        report_error(err, "internal_error", e.what());
        return k_exit_domain;
    }
}

int main_entry(int argc, char **argv)
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return run(args, std::cout, std::cerr);
}

} // namespace fracpow::cli
