#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actk/problems.hpp"

using namespace actk;

namespace {

bool accepts(const Tree& t, std::vector<Rational> x) { return evaluate(t, x).accepted; }

}  // namespace

TEST_CASE("lattice parity membership") {
    ProblemBundle bundle = parity_problem(2, 3);
    CHECK(validate_tree(bundle.tree).empty());
    CHECK(accepts(bundle.tree, {Rational(1), Rational(2)}));          // lattice vertex
    CHECK(accepts(bundle.tree, {Rational(3, 2), Rational(5, 2)}));    // open square
    CHECK(!accepts(bundle.tree, {Rational(1), Rational(5, 2)}));      // open edge
    CHECK(!accepts(bundle.tree, {Rational(7, 2), Rational(1)}));      // outside the lattice
    CHECK(!accepts(bundle.tree, {Rational(0), Rational(0)}));

    CHECK(eval_formula(bundle.strict_dnf, std::vector<Rational>{Rational(3, 2), Rational(5, 2)}));
    CHECK(!eval_formula(bundle.strict_dnf, std::vector<Rational>{Rational(1), Rational(5, 2)}));
}

TEST_CASE("parity tree and formula decide the same set") {
    for (auto [n, m] : {std::pair<unsigned, unsigned>{2, 3}, {2, 4}, {3, 3}}) {
        ProblemBundle bundle = parity_problem(n, m);
        CHECK(sampled_mismatch_count(bundle.tree, bundle.strict_dnf, 1000, 42) == 0);
        CHECK(tree_metrics(bundle.tree).height <= bundle.declared_height_bound);
    }
}

TEST_CASE("parity disjunct census") {
    ProblemBundle bundle = parity_problem(2, 3);
    // (m-1)^2 open squares plus m^2 vertices.
    CHECK(bundle.strict_dnf.disjuncts.size() == 4 + 9);
    CHECK(parity_expected_b1(3) == 4);
    CHECK(parity_expected_b1(4) == 12);
}

TEST_CASE("parameter validation of the generators") {
    CHECK_THROWS_AS(parity_problem(1, 3), std::invalid_argument);
    CHECK_THROWS_AS(parity_problem(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(distinctness_tree(1), std::invalid_argument);
}

TEST_CASE("distinctness membership and shape") {
    ProblemBundle bundle = distinctness_tree(3);
    CHECK(validate_tree(bundle.tree).empty());
    CHECK(accepts(bundle.tree, {Rational(1), Rational(2), Rational(3)}));
    CHECK(!accepts(bundle.tree, {Rational(1), Rational(1), Rational(2)}));
    CHECK(sampled_mismatch_count(bundle.tree, bundle.strict_dnf, 1000, 7) == 0);
    CHECK(tree_metrics(bundle.tree).height <= bundle.declared_height_bound);
    CHECK(bundle.strict_dnf.disjuncts.size() == 2);
    DnfStats s = dnf_stats(bundle.strict_dnf);
    CHECK(s.distinct_polynomials == 1);
    CHECK(s.max_degree == 3);
}

TEST_CASE("circle projection instance wiring") {
    CircleFiberExample ex = circle_fiber_example();
    CHECK(validate_tree(ex.sigma_tree).empty());
    CHECK(accepts(ex.sigma_tree, {Rational(0), Rational(1)}));
    CHECK(accepts(ex.sigma_tree, {Rational(3, 5), Rational(4, 5)}));
    CHECK(!accepts(ex.sigma_tree, {Rational(1), Rational(1)}));
    CHECK(sampled_mismatch_count(ex.sigma_tree, ex.sigma_strict_dnf, 1000, 3) == 0);

    CHECK(eval_formula(ex.projection_strict_dnf, std::vector<Rational>{Rational(1)}));
    CHECK(eval_formula(ex.projection_strict_dnf, std::vector<Rational>{Rational(0)}));
    CHECK(!eval_formula(ex.projection_strict_dnf, std::vector<Rational>{Rational(2)}));

    CHECK(ex.w0.product_arity() == 2);
    CHECK(ex.w1.product_arity() == 3);
    Tree w1 = fiber_product_tree(ex.sigma_tree, ex.w1);
    CHECK(accepts(w1, {Rational(0), Rational(-1), Rational(1)}));
}

TEST_CASE("planar image of the interval curve has three double points") {
    CrossingExample ex = crossing_number_example();
    REQUIRE(ex.curve.size() == 3);
    // The symmetric crossing: t = +-sqrt(3) both map to (0, 3/2).
    // Verified through the polynomial identities x(t)^2 = t^2(t^2-3)^2 etc.
    Polynomial x = ex.curve[0], y = ex.curve[1];
    std::vector<Rational> a{Rational(2)}, b{Rational(-2)};
    CHECK(x.eval(a) == -x.eval(b));  // odd in t
    CHECK(y.eval(a) == y.eval(b));   // even in t

    CrossingReport report = crossing_complement_report(ex);
    CHECK(report.complement_components == 4);
    CHECK(report.crossing_number == 3);
    CHECK(report.crossing_number == ex.expected_crossings);
}

TEST_CASE("degenerate straight segment has no crossings") {
    CrossingReport report = crossing_complement_report(crossing_segment_example());
    CHECK(report.complement_components == 1);
    CHECK(report.crossing_number == 0);
}

TEST_CASE("mismatch sampling is seed-stable and catches real differences") {
    ProblemBundle bundle = distinctness_tree(2);
    CHECK(sampled_mismatch_count(bundle.tree, bundle.strict_dnf, 500, 99) ==
          sampled_mismatch_count(bundle.tree, bundle.strict_dnf, 500, 99));
    // Compare against the complement formula: almost every sample disagrees.
    Dnf wrong;
    wrong.arity = 2;
    Polynomial diff = Polynomial::variable(2, 0) - Polynomial::variable(2, 1);
    wrong.disjuncts.push_back({{{diff, Sign::EQ}}, std::nullopt});
    CHECK(sampled_mismatch_count(bundle.tree, wrong, 500, 99) > 400);
}
