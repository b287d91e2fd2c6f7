#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actk/extract.hpp"
#include "support/corpus.hpp"

using namespace actk;

namespace {

Tree not_equal_tree() {
    TreeBuilder b(2);
    VertexId d = b.add(ComputationVertex{ArithOp::Sub, InputOperand{0}, InputOperand{1}, {}});
    VertexId br = b.add(BranchVertex{VarOperand{d}, b.leaf(true), b.leaf(false), b.leaf(true)});
    b.set_next(d, br);
    return b.take(d);
}

/// k successive squarings of x1+1, branch at the end.
Tree squaring_tree(unsigned k) {
    TreeBuilder b(1);
    VertexId cur = b.add(ComputationVertex{ArithOp::Add, InputOperand{0}, ConstOperand{Rational(1)}, {}});
    VertexId first = cur;
    for (unsigned i = 0; i < k; ++i) {
        VertexId sq = b.add(ComputationVertex{ArithOp::Mul, VarOperand{cur}, VarOperand{cur}, {}});
        b.set_next(cur, sq);
        cur = sq;
    }
    VertexId br = b.add(BranchVertex{VarOperand{cur}, b.leaf(true), b.leaf(false), b.leaf(false)});
    b.set_next(cur, br);
    return b.take(first);
}

}  // namespace

TEST_CASE("vertex expansion through a computation chain") {
    TreeBuilder b(1);
    VertexId sq = b.add(ComputationVertex{ArithOp::Mul, InputOperand{0}, InputOperand{0}, {}});
    VertexId shift = b.add(ComputationVertex{ArithOp::Sub, VarOperand{sq}, ConstOperand{Rational(2)}, {}});
    VertexId br = b.add(BranchVertex{VarOperand{shift}, b.leaf(true), b.leaf(false), b.leaf(false)});
    b.set_next(sq, shift);
    b.set_next(shift, br);
    Tree t = b.take(sq);

    Polynomial expect(1);
    expect.add_term({2}, 1);
    expect.add_term({0}, -2);
    CHECK(vertex_polynomial(t, shift) == expect);
    CHECK(vertex_polynomial(t, br) == expect);  // the branch test expands too
    CHECK_THROWS_AS(vertex_polynomial(t, std::get<BranchVertex>(t.at(br)).gt),
                    std::invalid_argument);  // leaves carry no polynomial
}

TEST_CASE("branch testing an input directly expands to that variable") {
    TreeBuilder b(2);
    VertexId br = b.add(BranchVertex{InputOperand{0}, b.leaf(true), b.leaf(false), b.leaf(false)});
    Tree t = b.take(br);
    CHECK(vertex_polynomial(t, br) == Polynomial::variable(2, 0));
}

TEST_CASE("repeated squaring reaches the extremal degree") {
    for (unsigned k : {1u, 3u, 5u}) {
        Tree t = squaring_tree(k);
        TreeMetrics m = tree_metrics(t);
        Dnf f = leaf_dnf(t);
        REQUIRE(f.disjuncts.size() == 1);
        CHECK(f.disjuncts[0].conds[0].poly.total_degree() == (1u << k));
        CHECK(m.mult_count_max == k);
    }
}

TEST_CASE("leaf extraction of the inequality tree") {
    Dnf f = leaf_dnf(not_equal_tree());
    REQUIRE(f.disjuncts.size() == 2);
    Polynomial diff = Polynomial::variable(2, 0) - Polynomial::variable(2, 1);
    for (const auto& d : f.disjuncts) {
        REQUIRE(d.conds.size() == 1);
        CHECK(d.conds[0].poly == diff);
        CHECK((d.conds[0].sign == Sign::GT || d.conds[0].sign == Sign::LT));
        CHECK(d.leaf_id.has_value());
    }
    DnfStats s = dnf_stats(f);
    CHECK(s.distinct_polynomials == 1);
    CHECK(s.max_degree == 1);
    CHECK(s.disjunct_count == 2);
    CHECK(s.max_conds_per_disjunct == 1);
}

TEST_CASE("a lone accepting leaf extracts to one unconstrained disjunct") {
    TreeBuilder b(2);
    Tree t = b.take(b.leaf(true));
    Dnf f = leaf_dnf(t);
    REQUIRE(f.disjuncts.size() == 1);
    CHECK(f.disjuncts[0].conds.empty());
    CHECK(eval_formula(f, std::vector<Rational>{Rational(5), Rational(-7)}));
}

TEST_CASE("extracted formula matches direct evaluation on random trees") {
    testing::Rng rng(31);
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        unsigned arity = 1 + seed % 3;
        Tree t = testing::random_tree({arity, 6, seed + 500});
        Dnf f = leaf_dnf(t);
        for (int i = 0; i < 200; ++i) {
            auto x = rng.sample_point(arity);
            CHECK(evaluate(t, x).accepted == eval_formula(f, x));
        }
    }
}

TEST_CASE("leaf sets of one tree are pairwise disjoint on samples") {
    testing::Rng rng(37);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Tree t = testing::random_tree({2, 6, seed + 900});
        Dnf f = leaf_dnf(t);
        for (int i = 0; i < 100; ++i) {
            auto x = rng.sample_point(2);
            int hits = 0;
            for (const auto& d : f.disjuncts) {
                bool all = true;
                for (const auto& c : d.conds) all = all && c.holds_at(x);
                hits += all ? 1 : 0;
            }
            CHECK(hits <= 1);
        }
    }
}

TEST_CASE("counting statistics respect the height-derived caps") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Tree t = testing::random_tree({2, 6, seed + 40});
        TreeMetrics m = tree_metrics(t);
        DnfStats s = dnf_stats(leaf_dnf(t));
        double cap3 = std::pow(3.0, static_cast<double>(m.height));
        CHECK(static_cast<double>(s.disjunct_count) <= cap3);
        CHECK(static_cast<double>(s.distinct_polynomials) <= m.height * cap3);
        CHECK(s.max_conds_per_disjunct <= m.height);
    }
}

TEST_CASE("term guard aborts oversized expansions") {
    Tree t = squaring_tree(5);  // (x+1)^32 has 33 terms
    CHECK_THROWS_AS(leaf_dnf(t, {10}), ResourceLimitError);
    CHECK_NOTHROW(leaf_dnf(t, {40}));
}

TEST_CASE("formula json round trip") {
    Dnf f = leaf_dnf(not_equal_tree());
    std::string text = emit_dnf_json(f);
    CHECK(emit_dnf_json(parse_dnf_json(text)) == text);
}
