#include "actk/formula.hpp"

#include <set>

#include <nlohmann/json.hpp>

namespace actk {

using json = nlohmann::ordered_json;

const char* sign_name(Sign s) {
    switch (s) {
        case Sign::LT: return "lt";
        case Sign::EQ: return "eq";
        case Sign::GT: return "gt";
        case Sign::LE: return "le";
        case Sign::GE: return "ge";
    }
    return "?";
}

Sign sign_from_name(const std::string& s) {
    if (s == "lt") return Sign::LT;
    if (s == "eq") return Sign::EQ;
    if (s == "gt") return Sign::GT;
    if (s == "le") return Sign::LE;
    if (s == "ge") return Sign::GE;
    throw std::invalid_argument("unknown sign: " + s);
}

bool is_strict(Sign s) { return s == Sign::LT || s == Sign::GT; }

bool SignCondition::holds_at(std::span<const Rational> x) const {
    int s = sign_of(poly.eval(x));
    switch (sign) {
        case Sign::LT: return s < 0;
        case Sign::EQ: return s == 0;
        case Sign::GT: return s > 0;
        case Sign::LE: return s <= 0;
        case Sign::GE: return s >= 0;
    }
    return false;
}

bool eval_formula(const Dnf& f, std::span<const Rational> x) {
    if (x.size() != f.arity) throw std::invalid_argument("formula arity mismatch");
    for (const auto& disjunct : f.disjuncts) {
        bool all = true;
        for (const auto& cond : disjunct.conds) {
            if (!cond.holds_at(x)) { all = false; break; }
        }
        if (all) return true;
    }
    return false;
}

DnfStats dnf_stats(const Dnf& f) {
    DnfStats st;
    st.disjunct_count = f.disjuncts.size();
    std::set<Polynomial> polys;
    for (const auto& d : f.disjuncts) {
        st.max_conds_per_disjunct = std::max(st.max_conds_per_disjunct, d.conds.size());
        for (const auto& c : d.conds) {
            polys.insert(c.poly);
            st.max_degree = std::max(st.max_degree, c.poly.total_degree());
        }
    }
    st.distinct_polynomials = polys.size();
    return st;
}

namespace {

json poly_to_json(const Polynomial& p) {
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        t["coef"] = format_rational(c);
        t["exps"] = e;
        terms.push_back(std::move(t));
    }
    return terms;
}

Polynomial poly_from_json(const json& j, unsigned arity) {
    Polynomial p(arity);
    for (const auto& t : j) {
        Polynomial::Exponents e = t.at("exps").get<Polynomial::Exponents>();
        p.add_term(e, parse_rational(t.at("coef").get<std::string>()));
    }
    return p;
}

}  // namespace

std::string emit_dnf_json(const Dnf& f) {
    json out;
    out["inputs"] = f.arity;
    json u = json::array();
    for (const auto& d : f.disjuncts) {
        json conds = json::array();
        for (const auto& c : d.conds) {
            json jc;
            jc["poly"] = poly_to_json(c.poly);
            jc["sign"] = sign_name(c.sign);
            conds.push_back(std::move(jc));
        }
        json jd;
        jd["conds"] = std::move(conds);
        if (d.leaf_id) jd["leaf"] = *d.leaf_id;
        u.push_back(std::move(jd));
    }
    out["union"] = std::move(u);
    return out.dump(2) + "\n";
}

Dnf parse_dnf_json(const std::string& text) {
    json j = json::parse(text);
    Dnf f;
    f.arity = j.at("inputs").get<unsigned>();
    for (const auto& jd : j.at("union")) {
        BasicSet b;
        for (const auto& jc : jd.at("conds")) {
            b.conds.push_back(
                {poly_from_json(jc.at("poly"), f.arity), sign_from_name(jc.at("sign").get<std::string>())});
        }
        if (jd.contains("leaf")) b.leaf_id = jd.at("leaf").get<std::string>();
        f.disjuncts.push_back(std::move(b));
    }
    return f;
}

}  // namespace actk
