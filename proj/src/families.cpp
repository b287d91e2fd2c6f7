#include "actk/families.hpp"

#include <sstream>

namespace actk {

AmbientMode AmbientMode::bounded(const Rational& radius_sq) {
    if (radius_sq <= 0) throw std::invalid_argument("ball radius must be positive");
    AmbientMode m;
    m.kind = Kind::Bounded;
    m.ball_radius_sq = radius_sq;
    return m;
}

namespace {

void require_strict_only(const Dnf& f) {
    for (const auto& d : f.disjuncts)
        for (const auto& c : d.conds)
            if (c.sign == Sign::LE || c.sign == Sign::GE)
                throw std::invalid_argument("input formula must use strict LT/EQ/GT signs only");
}

/// |x|^2 - 1/delta <= 0 in n variables.
SignCondition ball_condition(unsigned arity, const Rational& delta) {
    Polynomial h(arity);
    Polynomial::Exponents e(arity, 0);
    for (unsigned i = 0; i < arity; ++i) {
        e[i] = 2;
        h.add_term(e, Rational(1));
        e[i] = 0;
    }
    h.add_term(Polynomial::Exponents(arity, 0), -Rational(1) / delta);
    return {std::move(h), Sign::LE};
}

Dnf closure_impl(const Dnf& f, const Rational& delta, const Rational* eps,
                 const AmbientMode& mode) {
    if (delta <= 0) throw std::invalid_argument("delta must be positive");
    if (eps && *eps <= 0) throw std::invalid_argument("eps must be positive");
    require_strict_only(f);
    const Polynomial delta_poly = Polynomial::constant(f.arity, delta);
    Dnf out;
    out.arity = f.arity;
    for (const auto& d : f.disjuncts) {
        BasicSet b;
        b.leaf_id = d.leaf_id;
        for (const auto& c : d.conds) {
            switch (c.sign) {
                case Sign::GT:
                    b.conds.push_back({c.poly - delta_poly, Sign::GE});
                    break;
                case Sign::LT:
                    b.conds.push_back({c.poly.negated() - delta_poly, Sign::GE});
                    break;
                case Sign::EQ:
                    if (eps) {
                        Polynomial sq = c.poly * c.poly;
                        sq.add_term(Polynomial::Exponents(f.arity, 0), -*eps);
                        b.conds.push_back({std::move(sq), Sign::LE});
                    } else {
                        b.conds.push_back(c);
                    }
                    break;
                default:
                    break;  // unreachable, strictness checked above
            }
        }
        if (mode.kind == AmbientMode::Kind::Unbounded)
            b.conds.push_back(ball_condition(f.arity, delta));
        out.disjuncts.push_back(std::move(b));
    }
    return out;
}

}  // namespace

Dnf closure_delta(const Dnf& f, const Rational& delta, const AmbientMode& mode) {
    return closure_impl(f, delta, nullptr, mode);
}

Dnf closure_delta_eps(const Dnf& f, const Rational& delta, const Rational& eps,
                      const AmbientMode& mode) {
    return closure_impl(f, delta, &eps, mode);
}

Dnf t_m_formula(const Dnf& f, const Schedule& sched, const AmbientMode& mode) {
    if (sched.levels.empty()) throw std::invalid_argument("schedule has no levels");
    Dnf out;
    out.arity = f.arity;
    for (const auto& level : sched.levels) {
        Dnf part = closure_delta_eps(f, level.delta, level.eps, mode);
        for (auto& d : part.disjuncts) out.disjuncts.push_back(std::move(d));
    }
    return out;
}

std::vector<std::string> validate_schedule(const Schedule& sched, const Rational& ratio) {
    std::vector<std::string> diags;
    if (ratio <= 1) {
        diags.push_back("separation ratio must exceed 1");
        return diags;
    }
    // Flatten to eps_0, delta_0, eps_1, ..., delta_l, 1 and check each step.
    std::vector<std::pair<std::string, Rational>> seq;
    for (std::size_t i = 0; i < sched.levels.size(); ++i) {
        seq.emplace_back("eps_" + std::to_string(i), sched.levels[i].eps);
        seq.emplace_back("delta_" + std::to_string(i), sched.levels[i].delta);
    }
    seq.emplace_back("1", Rational(1));
    if (!sched.levels.empty() && sched.levels.front().eps <= 0)
        diags.push_back("eps_0 must be positive");
    for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
        const auto& [name_a, a] = seq[i];
        const auto& [name_b, b] = seq[i + 1];
        if (!(a < b)) {
            diags.push_back(name_a + " = " + format_rational(a) + " must be strictly below " +
                            name_b + " = " + format_rational(b));
        } else if (i + 2 < seq.size() && a > 0 && b / a < ratio) {
            // The final bound delta_l < 1 is strict only; no ratio requirement.
            diags.push_back("ratio " + name_b + "/" + name_a + " = " + format_rational(b / a) +
                            " is below the separation ratio " + format_rational(ratio));
        }
    }
    return diags;
}

Schedule parse_schedule(const std::string& text) {
    Schedule s;
    std::vector<Rational> vals;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) vals.push_back(parse_rational(item));
    if (vals.empty() || vals.size() % 2 != 0)
        throw std::invalid_argument("schedule needs an even, positive number of entries");
    for (std::size_t i = 0; i < vals.size(); i += 2) s.levels.push_back({vals[i], vals[i + 1]});
    return s;
}

}  // namespace actk
