#include "actk/polynomial.hpp"

#include <numeric>
#include <sstream>

namespace actk {

Polynomial Polynomial::constant(unsigned arity, const Rational& c) {
    Polynomial p(arity);
    p.add_term(Exponents(arity, 0), c);
    return p;
}

Polynomial Polynomial::variable(unsigned arity, unsigned index) {
    if (index >= arity) throw std::invalid_argument("variable index out of range");
    Polynomial p(arity);
    Exponents e(arity, 0);
    e[index] = 1;
    p.add_term(e, Rational(1));
    return p;
}

void Polynomial::add_term(const Exponents& exps, const Rational& c) {
    if (c == 0) return;
    if (exps.size() != arity_) throw std::invalid_argument("exponent vector length mismatch");
    auto [it, inserted] = terms_.emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

void Polynomial::check_arity(const Polynomial& q) const {
    if (arity_ != q.arity_) throw std::invalid_argument("polynomial arity mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& q) const {
    check_arity(q);
    Polynomial r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e, c);
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& q) const {
    check_arity(q);
    Polynomial r = *this;
    for (const auto& [e, c] : q.terms_) r.add_term(e, -c);
    return r;
}

Polynomial Polynomial::operator*(const Polynomial& q) const {
    check_arity(q);
    Polynomial r(arity_);
    Exponents e(arity_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : q.terms_) {
            for (unsigned i = 0; i < arity_; ++i) e[i] = ea[i] + eb[i];
            r.add_term(e, ca * cb);
        }
    }
    return r;
}

Polynomial Polynomial::negated() const {
    Polynomial r(arity_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

bool Polynomial::operator<(const Polynomial& q) const {
    if (arity_ != q.arity_) return arity_ < q.arity_;
    return terms_ < q.terms_;
}

Rational Polynomial::eval(std::span<const Rational> x) const {
    if (x.size() != arity_) throw std::invalid_argument("evaluation point arity mismatch");
    Rational acc(0);
    for (const auto& [e, c] : terms_) {
        Rational t = c;
        for (unsigned i = 0; i < arity_; ++i) {
            for (unsigned k = 0; k < e[i]; ++k) t *= x[i];
        }
        acc += t;
    }
    return acc;
}

unsigned Polynomial::total_degree() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) {
        unsigned s = std::accumulate(e.begin(), e.end(), 0u);
        d = std::max(d, s);
    }
    return d;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << format_rational(c);
        for (unsigned i = 0; i < arity_; ++i) {
            if (e[i] == 0) continue;
            out << "*x" << (i + 1);
            if (e[i] > 1) out << "^" << e[i];
        }
    }
    return out.str();
}

}  // namespace actk
