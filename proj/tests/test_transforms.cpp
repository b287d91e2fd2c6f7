#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "actk/extract.hpp"
#include "actk/transforms.hpp"
#include "support/corpus.hpp"

using namespace actk;

namespace {

/// Branch on a single input with configurable accepting signs.
Tree sign_tree(bool gt, bool eq, bool lt) {
    TreeBuilder b(1);
    VertexId br = b.add(BranchVertex{InputOperand{0}, b.leaf(gt), b.leaf(eq), b.leaf(lt)});
    return b.take(br);
}

Tree circle_tree() {
    TreeBuilder b(2);
    VertexId sx = b.add(ComputationVertex{ArithOp::Mul, InputOperand{0}, InputOperand{0}, {}});
    VertexId sy = b.add(ComputationVertex{ArithOp::Mul, InputOperand{1}, InputOperand{1}, {}});
    VertexId sum = b.add(ComputationVertex{ArithOp::Add, VarOperand{sx}, VarOperand{sy}, {}});
    VertexId shift = b.add(ComputationVertex{ArithOp::Sub, VarOperand{sum}, ConstOperand{Rational(1)}, {}});
    VertexId br = b.add(BranchVertex{VarOperand{shift}, b.leaf(false), b.leaf(true), b.leaf(false)});
    b.set_next(sx, sy);
    b.set_next(sy, sum);
    b.set_next(sum, shift);
    b.set_next(shift, br);
    return b.take(sx);
}

bool accepts(const Tree& t, std::vector<Rational> x) { return evaluate(t, x).accepted; }

}  // namespace

TEST_CASE("union and intersection of sign trees") {
    Tree pos = sign_tree(true, false, false);
    Tree neg = sign_tree(false, false, true);
    Tree u = union_tree(pos, neg);
    CHECK(validate_tree(u).empty());
    CHECK(accepts(u, {Rational(1)}));
    CHECK(accepts(u, {Rational(-1)}));
    CHECK(!accepts(u, {Rational(0)}));
    CHECK(tree_metrics(u).height <= tree_metrics(pos).height + tree_metrics(neg).height);

    Tree self = intersect_tree(pos, pos);
    testing::Rng rng(41);
    for (int i = 0; i < 1000; ++i) {
        auto x = rng.sample_point(1);
        CHECK(accepts(self, x) == accepts(pos, x));
    }
    CHECK_THROWS_AS(union_tree(pos, circle_tree()), std::invalid_argument);
}

TEST_CASE("margin transform of a positivity test") {
    Tree t = sign_tree(true, false, false);
    Tree ted = eps_delta_tree(t, {Rational(1, 100), Rational(1, 10)});
    CHECK(validate_tree(ted).empty());
    CHECK(accepts(ted, {Rational(1)}));
    CHECK(!accepts(ted, {Rational(1, 20)}));  // below the delta margin
    CHECK(!accepts(ted, {Rational(4)}));      // outside the 1/delta ball
}

TEST_CASE("margin transform of an equation test") {
    Tree t = sign_tree(false, true, false);
    Tree ted = eps_delta_tree(t, {Rational(1, 100), Rational(1, 10)});
    CHECK(accepts(ted, {Rational(1, 20)}));  // inside the eps thickening
    CHECK(!accepts(ted, {Rational(1, 5)}));
}

TEST_CASE("transformed trees match the closure formulas everywhere sampled") {
    testing::Rng rng(43);
    const EpsDelta ed{Rational(1, 200), Rational(1, 10)};
    const Schedule sched{{{Rational(1, 100000), Rational(1, 100)}, {Rational(1, 20), Rational(1, 2)}}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        unsigned arity = 1 + seed % 3;
        Tree t = testing::random_tree({arity, 6, seed + 1000});
        Dnf base = leaf_dnf(t);
        Tree one = eps_delta_tree(t, ed);
        Dnf one_f = closure_delta_eps(base, ed.delta, ed.eps, AmbientMode::unbounded());
        Tree multi = t_ell_tree(t, sched);
        Dnf multi_f = t_m_formula(base, sched, AmbientMode::unbounded());
        for (int i = 0; i < 100; ++i) {
            auto x = rng.sample_point(arity);
            CHECK(accepts(one, x) == eval_formula(one_f, x));
            CHECK(accepts(multi, x) == eval_formula(multi_f, x));
        }
    }
}

TEST_CASE("height bounds of the margin and union transforms") {
    const Schedule sched{{{Rational(1, 100000), Rational(1, 100)}, {Rational(1, 20), Rational(1, 2)}}};
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        unsigned arity = 1 + seed % 3;
        Tree t = testing::random_tree({arity, 6, seed + 2000});
        std::size_t k = tree_metrics(t).height;
        Tree one = eps_delta_tree(t, {Rational(1, 100), Rational(1, 10)});
        CHECK(tree_metrics(one).height <= 7 * k + 2 * arity + 2);
        Tree multi = t_ell_tree(t, sched);
        std::size_t levels = sched.levels.size();
        CHECK(tree_metrics(multi).height <= 7 * levels * k + 2 * arity + 2 * levels + 2);
    }
}

TEST_CASE("single-level schedule degenerates to the one-shot transform") {
    testing::Rng rng(47);
    Tree t = sign_tree(true, false, false);
    Tree a = eps_delta_tree(t, {Rational(1, 100), Rational(1, 10)});
    Tree b = t_ell_tree(t, Schedule{{{Rational(1, 100), Rational(1, 10)}}});
    for (int i = 0; i < 1000; ++i) {
        auto x = rng.sample_point(1);
        CHECK(accepts(a, x) == accepts(b, x));
    }
}

TEST_CASE("two-level transform keeps coarse-scale points") {
    Tree t = sign_tree(true, false, false);
    Tree multi = t_ell_tree(t, parse_schedule("1/10000,1/100,1/25,1/5"));
    CHECK(accepts(multi, {Rational(1, 50)}));  // caught by the coarse level
    CHECK(!accepts(multi, {Rational(1, 100000)}));
}

TEST_CASE("nesting: a larger margin set sits inside a smaller one") {
    testing::Rng rng(53);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Tree t = testing::random_tree({2, 5, seed + 3000});
        Tree tight = eps_delta_tree(t, {Rational(1, 100), Rational(1, 4)});
        Tree loose = eps_delta_tree(t, {Rational(1, 100), Rational(1, 10)});
        for (int i = 0; i < 100; ++i) {
            auto x = rng.sample_point(2);
            if (accepts(tight, x)) CHECK(accepts(loose, x));
        }
    }
}

TEST_CASE("fiber product with one factor is a renaming") {
    Tree t = circle_tree();
    Tree w0 = fiber_product_tree(t, FiberSpec{2, 1, 0});
    CHECK(validate_tree(w0).empty());
    CHECK(w0.arity == 2);
    testing::Rng rng(59);
    for (int i = 0; i < 1000; ++i) {
        auto x = rng.sample_point(2);
        CHECK(accepts(w0, x) == accepts(t, x));
    }
}

TEST_CASE("two-factor fiber product checks both fibers") {
    Tree w1 = fiber_product_tree(circle_tree(), FiberSpec{2, 1, 1});
    CHECK(w1.arity == 3);
    CHECK(accepts(w1, {Rational(0), Rational(1), Rational(-1)}));
    CHECK(!accepts(w1, {Rational(0), Rational(1), Rational(1, 2)}));
}

TEST_CASE("fiber product height is exactly multiplicative here") {
    Tree t = circle_tree();
    std::size_t k = tree_metrics(t).height;
    for (unsigned p : {1u, 2u}) {
        Tree w = fiber_product_tree(t, FiberSpec{2, 1, p});
        CHECK(tree_metrics(w).height == (p + 1) * k);
        CHECK(validate_tree(w).empty());
    }
}

TEST_CASE("bad fiber specs are rejected") {
    Tree t = circle_tree();
    CHECK_THROWS_AS(fiber_product_tree(t, FiberSpec{2, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(fiber_product_tree(t, FiberSpec{2, 2, 1}), std::invalid_argument);
    CHECK_THROWS_AS(fiber_product_tree(t, FiberSpec{3, 1, 1}), std::invalid_argument);
}
