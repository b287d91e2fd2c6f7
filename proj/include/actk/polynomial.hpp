#ifndef ACTK_POLYNOMIAL_HPP
#define ACTK_POLYNOMIAL_HPP

#include <map>
#include <span>
#include <vector>

#include "actk/rational.hpp"

namespace actk {

/// Sparse multivariate polynomial over the rationals, in canonical form:
/// a term map from exponent vectors (dense, length = arity) to nonzero
/// coefficients.  Two polynomials are equal iff their term maps are equal.
class Polynomial {
public:
    using Exponents = std::vector<unsigned>;
    using TermMap = std::map<Exponents, Rational>;

    explicit Polynomial(unsigned arity) : arity_(arity) {}

    static Polynomial constant(unsigned arity, const Rational& c);
    /// The monomial x_{index} (0-based).
    static Polynomial variable(unsigned arity, unsigned index);

    unsigned arity() const { return arity_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds c * x^exps, dropping the term if the total coefficient cancels.
    void add_term(const Exponents& exps, const Rational& c);

    Polynomial operator+(const Polynomial& q) const;
    Polynomial operator-(const Polynomial& q) const;
    Polynomial operator*(const Polynomial& q) const;
    Polynomial negated() const;

    bool operator==(const Polynomial& q) const {
        return arity_ == q.arity_ && terms_ == q.terms_;
    }
    bool operator<(const Polynomial& q) const;  // canonical order, for dedup sets

    Rational eval(std::span<const Rational> x) const;

    /// Max over terms of the exponent sum; 0 for the zero polynomial.
    unsigned total_degree() const;

    std::string to_string() const;  // debugging aid

private:
    void check_arity(const Polynomial& q) const;

    unsigned arity_;
    TermMap terms_;
};

}  // namespace actk

#endif
