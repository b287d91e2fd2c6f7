#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actk/polynomial.hpp"
#include "support/corpus.hpp"

using namespace actk;

namespace {

Polynomial x(unsigned arity, unsigned i) { return Polynomial::variable(arity, i); }

Polynomial random_poly(testing::Rng& rng, unsigned arity) {
    Polynomial p(arity);
    unsigned terms = 1 + rng.below(5);
    for (unsigned t = 0; t < terms; ++t) {
        Polynomial::Exponents e(arity);
        for (auto& v : e) v = rng.below(4);
        p.add_term(e, rng.small_rational());
    }
    return p;
}

}  // namespace

TEST_CASE("arithmetic basics") {
    Polynomial sum = x(2, 0) + x(2, 1);
    CHECK(sum.terms().size() == 2);
    CHECK(sum.eval(std::vector<Rational>{Rational(2), Rational(5)}) == 7);

    Polynomial diff_sq = (x(2, 0) - x(2, 1)) * (x(2, 0) + x(2, 1));
    Polynomial expect(2);
    expect.add_term({2, 0}, 1);
    expect.add_term({0, 2}, -1);
    CHECK(diff_sq == expect);
}

TEST_CASE("subtracting a polynomial from itself yields zero") {
    testing::Rng rng(7);
    for (int i = 0; i < 50; ++i) {
        Polynomial p = random_poly(rng, 3);
        CHECK((p - p).is_zero());
    }
}

TEST_CASE("evaluation") {
    Polynomial p = x(2, 0) * x(2, 0) + x(2, 1) * x(2, 1);
    CHECK(p.eval(std::vector<Rational>{Rational(3), Rational(4)}) == 25);
    CHECK(Polynomial(2).eval(std::vector<Rational>{Rational(9), Rational(-1)}) == 0);

    Polynomial v = (x(3, 0) - x(3, 1)) * (x(3, 0) - x(3, 2)) * (x(3, 1) - x(3, 2));
    CHECK(v.eval(std::vector<Rational>{Rational(1), Rational(2), Rational(3)}) == -2);
}

TEST_CASE("total degree") {
    Polynomial p(2);
    p.add_term({2, 1}, 1);
    p.add_term({0, 0}, 1);
    CHECK(p.total_degree() == 3);
    CHECK(Polynomial::constant(2, 5).total_degree() == 0);
    CHECK(Polynomial(2).total_degree() == 0);
}

TEST_CASE("arity mismatch is rejected") {
    CHECK_THROWS_AS(x(2, 0) + x(3, 0), std::invalid_argument);
    CHECK_THROWS_AS(x(2, 0).eval(std::vector<Rational>{Rational(1)}), std::invalid_argument);
}

TEST_CASE("canonical-form algebra on random polynomials") {
    testing::Rng rng(11);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(rng, 2), q = random_poly(rng, 2), r = random_poly(rng, 2);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK(p * (q + r) == p * q + p * r);
    }
}

TEST_CASE("evaluation is a ring homomorphism") {
    testing::Rng rng(13);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(rng, 3), q = random_poly(rng, 3);
        auto pt = rng.sample_point(3);
        CHECK((p + q).eval(pt) == p.eval(pt) + q.eval(pt));
        CHECK((p - q).eval(pt) == p.eval(pt) - q.eval(pt));
        CHECK((p * q).eval(pt) == p.eval(pt) * q.eval(pt));
    }
}

TEST_CASE("degree is additive under multiplication") {
    testing::Rng rng(17);
    for (int i = 0; i < 100; ++i) {
        Polynomial p = random_poly(rng, 2), q = random_poly(rng, 2);
        if (p.is_zero() || q.is_zero()) continue;
        CHECK((p * q).total_degree() == p.total_degree() + q.total_degree());
    }
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4/2") == Rational(-2));
    CHECK(format_rational(Rational(1, 2)) == "1/2");
    CHECK(format_rational(Rational(-7)) == "-7");
    CHECK_THROWS(parse_rational("1.5"));
    CHECK_THROWS(parse_rational("1/0"));
}
