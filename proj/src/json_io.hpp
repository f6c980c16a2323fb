#ifndef FRACPOW_SRC_JSON_IO_HPP
#define FRACPOW_SRC_JSON_IO_HPP

#include <json.hpp>

#include <fracpow/cyclotomic.hpp>
#include <fracpow/frac_series.hpp>
#include <fracpow/repfn.hpp>
#include <fracpow/solver.hpp>

namespace fracpow::json_io
{

using json = nlohmann::ordered_json;

inline json to_json(const Rational &q)
{
    return q.to_string();
}

inline json to_json(const std::vector<Term> &terms)
{
    json arr = json::array();
    for (const auto &t : terms) {
        arr.push_back(json::array({t.exponent.to_string(), t.coeff.to_string()}));
    }
    return arr;
}

inline json to_json(const FracSeries &f)
{
    return json{{"cutoff", f.cutoff().to_string()}, {"terms", to_json(f.terms())}};
}

inline json exps_to_json(const std::map<std::int64_t, Rational> &exps)
{
    json arr = json::array();
    for (const auto &[d, v] : exps) {
        arr.push_back(json::array({d, v.to_string()}));
    }
    return arr;
}

inline json to_json(const CycloProduct &g)
{
    return json{{"basis", basis_name(g.basis)}, {"exps", exps_to_json(g.exps)}};
}

inline json to_json(const DecisionReport &r)
{
    json out{{"verdict", verdict_name(r.verdict)}, {"gcd", r.gcd}};
    if (r.certificate) {
        const auto &c = *r.certificate;
        json samples = json::array();
        for (const auto &[d, g] : c.gd_samples) {
            samples.push_back(json::array({d, g.to_string()}));
        }
        out["certificate"] = json{
            {"p", c.witness.p},
            {"t", c.witness.t},
            {"H", to_json(c.h)},
            {"mexps", exps_to_json(c.mexps)},
            {"gd_samples", samples},
            {"gd_sample_limit", c.gd_sample_limit},
            {"bound", c.bound},
            {"recurrence", json{{"p", c.recurrence.p}, {"t", c.recurrence.t}, {"a", c.recurrence.a},
                                {"A", c.recurrence.A}, {"d_gcd", c.recurrence.d_gcd}}},
            {"contradiction",
             json{{"d_gcd", c.contradiction.d_gcd}, {"A", c.contradiction.A}, {"holds", c.contradiction.holds}}},
        };
    } else {
        out["certificate"] = nullptr;
    }
    if (r.evidence) {
        out["evidence"] = json{{"cutoff", r.evidence->cutoff.to_string()}, {"nonintegral", to_json(r.evidence->nonintegral)}};
    } else {
        out["evidence"] = nullptr;
    }
    return out;
}

inline json to_json(const CountReport &r)
{
    json out{{"values", r.values}};
    out["constant_from"] = r.constant_from ? json(*r.constant_from) : json(nullptr);
    out["safe_bound"] = r.safe_bound;
    return out;
}

} // namespace fracpow::json_io

#endif
