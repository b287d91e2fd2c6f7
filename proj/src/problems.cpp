#include "actk/problems.hpp"

#include <random>
#include <set>

#include "actk/tree_builder.hpp"

namespace actk {

namespace {

unsigned ceil_log2(unsigned m) {
    unsigned bits = 0;
    while ((1u << bits) < m) ++bits;
    return bits;
}

Polynomial shifted_variable(unsigned arity, unsigned index, long long shift) {
    // x_index + shift
    Polynomial p = Polynomial::variable(arity, index);
    p.add_term(Polynomial::Exponents(arity, 0), Rational(shift));
    return p;
}

}  // namespace

ProblemBundle parity_problem(unsigned n, unsigned m) {
    if (n < 2 || m < 3) throw std::invalid_argument("parity_problem needs n >= 2 and m >= 3");

    ProblemBundle bundle;

    // Strict formula: open 2-faces (two coordinates in an open unit gap, the
    // rest pinned to lattice values) plus all lattice vertices.
    Dnf f;
    f.arity = n;
    std::vector<unsigned> values(n);
    auto emit_face = [&](unsigned a, unsigned b_axis) {
        // values[a], values[b_axis] hold gap lower ends; others hold pins.
        BasicSet bs;
        for (unsigned i = 0; i < n; ++i) {
            long long v = values[i];
            if (i == a || i == b_axis) {
                bs.conds.push_back({shifted_variable(n, i, -v), Sign::GT});
                bs.conds.push_back({shifted_variable(n, i, -(v + 1)).negated(), Sign::GT});
            } else {
                bs.conds.push_back({shifted_variable(n, i, -v), Sign::EQ});
            }
        }
        f.disjuncts.push_back(std::move(bs));
    };
    for (unsigned a = 0; a < n; ++a) {
        for (unsigned b_axis = a + 1; b_axis < n; ++b_axis) {
            // Odometer over gap ends for (a, b) and pins for the rest.
            std::fill(values.begin(), values.end(), 1u);
            for (;;) {
                emit_face(a, b_axis);
                unsigned i = n;
                for (; i-- > 0;) {
                    unsigned limit = (i == a || i == b_axis) ? m - 1 : m;
                    if (++values[i] <= limit) break;
                    values[i] = 1;
                }
                if (i == static_cast<unsigned>(-1)) break;
            }
        }
    }
    std::fill(values.begin(), values.end(), 1u);
    for (;;) {
        BasicSet bs;
        for (unsigned i = 0; i < n; ++i)
            bs.conds.push_back({shifted_variable(n, i, -static_cast<long long>(values[i])), Sign::EQ});
        f.disjuncts.push_back(std::move(bs));
        unsigned i = n;
        for (; i-- > 0;) {
            if (++values[i] <= m) break;
            values[i] = 1;
        }
        if (i == static_cast<unsigned>(-1)) break;
    }
    bundle.strict_dnf = std::move(f);

    // Tree: binary-search classification per coordinate (integer / inside an
    // open gap / outside the lattice range), feeding a counter over the
    // number of non-integer coordinates, accepting at 0 or exactly 2.
    TreeBuilder b(n);
    VertexId reject = b.leaf(false);
    std::map<std::pair<unsigned, unsigned>, VertexId> next_memo;  // (coord, count)

    std::function<VertexId(unsigned, unsigned)> next_coord;
    std::function<VertexId(unsigned, unsigned, unsigned, unsigned, bool, bool)> search;

    search = [&](unsigned coord, unsigned lo, unsigned hi, unsigned count, bool has_lo,
                 bool has_hi) -> VertexId {
        if (lo > hi) {
            // Failed search: between consecutive integers iff bounded on both
            // sides, otherwise outside [1, m] entirely.
            if (!(has_lo && has_hi)) return reject;
            if (count + 1 > 2) return reject;
            return next_coord(coord + 1, count + 1);
        }
        unsigned mid = (lo + hi) / 2;
        VertexId test = b.add(ComputationVertex{
            ArithOp::Sub, InputOperand{coord}, ConstOperand{Rational(mid)}, {}});
        VertexId eq = next_coord(coord + 1, count);
        VertexId gt = search(coord, mid + 1, hi, count, true, has_hi);
        VertexId lt = (mid == 0) ? reject : search(coord, lo, mid - 1, count, has_lo, true);
        VertexId branch = b.add(BranchVertex{VarOperand{test}, gt, eq, lt});
        b.set_next(test, branch);
        return test;
    };

    next_coord = [&](unsigned coord, unsigned count) -> VertexId {
        if (coord == n) return b.leaf(count == 0 || count == 2);
        auto key = std::make_pair(coord, count);
        auto it = next_memo.find(key);
        if (it != next_memo.end()) return it->second;
        VertexId id = search(coord, 1, m, count, false, false);
        next_memo.emplace(key, id);
        return id;
    };

    VertexId root = next_coord(0, 0);
    bundle.tree = b.take(root);

    bundle.suggested_schedule =
        Schedule{{{Rational(1, 10000), Rational(1, 100)}, {Rational(1, 25), Rational(1, 5)}}};
    Box box;
    box.resolution = 200 * m;  // step 1/200 on a width-m box
    for (unsigned i = 0; i < n; ++i)
        box.intervals.emplace_back(Rational(1, 2), Rational(2 * m + 1, 2));
    bundle.suggested_box = std::move(box);
    bundle.declared_height_bound = static_cast<std::size_t>(n) * 2 * (ceil_log2(m) + 1) + 1;
    bundle.notes = "lattice parity: all coordinates integral or exactly two in open unit gaps";
    return bundle;
}

std::size_t parity_expected_b1(unsigned m) {
    // One hole per interior lattice edge of the 2D complex.
    return 2 * static_cast<std::size_t>(m - 1) * (m - 2);
}

ProblemBundle distinctness_tree(unsigned n) {
    if (n < 2) throw std::invalid_argument("distinctness needs n >= 2");
    ProblemBundle bundle;

    TreeBuilder b(n);
    VertexId first;
    VertexId prev;
    auto chain = [&](Vertex v) {
        VertexId id = b.add(std::move(v));
        if (first.empty()) first = id;
        else b.set_next(prev, id);
        prev = id;
        return id;
    };
    std::optional<VertexId> product;
    for (unsigned i = 0; i < n; ++i) {
        for (unsigned j = i + 1; j < n; ++j) {
            VertexId diff = chain(ComputationVertex{ArithOp::Sub, InputOperand{i}, InputOperand{j}, {}});
            if (!product) product = diff;
            else product = chain(ComputationVertex{ArithOp::Mul, VarOperand{*product}, VarOperand{diff}, {}});
        }
    }
    VertexId yes_hi = b.leaf(true);
    VertexId yes_lo = b.leaf(true);
    VertexId no = b.leaf(false);
    VertexId branch = b.add(BranchVertex{VarOperand{*product}, yes_hi, no, yes_lo});
    b.set_next(prev, branch);
    bundle.tree = b.take(first);

    Polynomial prod = Polynomial::constant(n, Rational(1));
    for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j)
            prod = prod * (Polynomial::variable(n, i) - Polynomial::variable(n, j));
    Dnf f;
    f.arity = n;
    f.disjuncts.push_back({{{prod, Sign::GT}}, std::nullopt});
    f.disjuncts.push_back({{{prod, Sign::LT}}, std::nullopt});
    bundle.strict_dnf = std::move(f);

    // delta_0 = 1/4 keeps the six order regions grid-separated at N = 50.
    bundle.suggested_schedule =
        Schedule{{{Rational(1, 16), Rational(1, 4)}, {Rational(1, 2), Rational(3, 4)}}};
    Box box;
    box.resolution = 50;
    for (unsigned i = 0; i < n; ++i) box.intervals.emplace_back(Rational(-1), Rational(1));
    bundle.suggested_box = std::move(box);
    bundle.declared_height_bound = static_cast<std::size_t>(n) * (n - 1) + 2;
    bundle.notes = "all-distinct via the product of pairwise differences";
    return bundle;
}

CircleFiberExample circle_fiber_example() {
    CircleFiberExample ex;

    TreeBuilder b(2);
    VertexId sx = b.add(ComputationVertex{ArithOp::Mul, InputOperand{0}, InputOperand{0}, {}});
    VertexId sy = b.add(ComputationVertex{ArithOp::Mul, InputOperand{1}, InputOperand{1}, {}});
    VertexId sum = b.add(ComputationVertex{ArithOp::Add, VarOperand{sx}, VarOperand{sy}, {}});
    VertexId shifted = b.add(ComputationVertex{ArithOp::Sub, VarOperand{sum}, ConstOperand{Rational(1)}, {}});
    VertexId yes = b.leaf(true);
    VertexId no_hi = b.leaf(false);
    VertexId no_lo = b.leaf(false);
    VertexId branch = b.add(BranchVertex{VarOperand{shifted}, no_hi, yes, no_lo});
    b.set_next(sx, sy);
    b.set_next(sy, sum);
    b.set_next(sum, shifted);
    b.set_next(shifted, branch);
    ex.sigma_tree = b.take(sx);

    Polynomial circle = Polynomial::variable(2, 0) * Polynomial::variable(2, 0) +
                        Polynomial::variable(2, 1) * Polynomial::variable(2, 1);
    circle.add_term(Polynomial::Exponents(2, 0), Rational(-1));
    ex.sigma_strict_dnf.arity = 2;
    ex.sigma_strict_dnf.disjuncts.push_back({{{circle, Sign::EQ}}, std::nullopt});

    Polynomial interval = Polynomial::constant(1, Rational(1)) -
                          Polynomial::variable(1, 0) * Polynomial::variable(1, 0);
    ex.projection_strict_dnf.arity = 1;
    ex.projection_strict_dnf.disjuncts.push_back({{{interval, Sign::GT}}, std::nullopt});
    ex.projection_strict_dnf.disjuncts.push_back({{{interval, Sign::EQ}}, std::nullopt});

    ex.w0 = FiberSpec{2, 1, 0};
    ex.w1 = FiberSpec{2, 1, 1};
    ex.schedule =
        Schedule{{{Rational(1, 10000), Rational(1, 100)}, {Rational(1, 25), Rational(1, 5)}}};

    ex.w0_box.resolution = 64;
    ex.w0_box.intervals = {{Rational(-3, 2), Rational(3, 2)}, {Rational(-3, 2), Rational(3, 2)}};
    ex.w1_box.resolution = 64;
    ex.w1_box.intervals = {{Rational(-3, 2), Rational(3, 2)},
                           {Rational(-3, 2), Rational(3, 2)},
                           {Rational(-3, 2), Rational(3, 2)}};
    ex.image_box.resolution = 64;
    ex.image_box.intervals = {{Rational(-2), Rational(2)}};
    return ex;
}

CrossingExample crossing_number_example() {
    CrossingExample ex;
    // x = t^3 - 3t, y = t^4 - (5/2) t^2, z = t^5 on t in [-2, 2].
    // The (x, y) projection has exactly three transverse double points:
    // (0, 3/2) from the symmetric pair t = +-sqrt(3), and a mirrored pair at
    // x = -+936/1000-ish from s+t = +-sqrt(7/2), st = 1/2.  z = t^5 is
    // strictly increasing, so the space curve itself is an embedding.
    Polynomial x(1), y(1), z(1);
    x.add_term({3}, Rational(1));
    x.add_term({1}, Rational(-3));
    y.add_term({4}, Rational(1));
    y.add_term({2}, Rational(-5, 2));
    z.add_term({5}, Rational(1));
    ex.curve = {x, y, z};
    ex.t_lo = Rational(-2);
    ex.t_hi = Rational(2);
    ex.image_box.resolution = 240;
    ex.image_box.intervals = {{Rational(-3), Rational(3)}, {Rational(-3), Rational(7)}};
    ex.t_samples = 4000;
    ex.expected_crossings = 3;
    ex.notes = "trefoil-style open curve; crossings = complement regions - 1";
    return ex;
}

CrossingExample crossing_segment_example() {
    CrossingExample ex;
    Polynomial x(1), y(1), z(1);
    x.add_term({1}, Rational(1));  // x = t
    // y = z = 0
    ex.curve = {x, y, z};
    ex.t_lo = Rational(-2);
    ex.t_hi = Rational(2);
    ex.image_box.resolution = 240;
    ex.image_box.intervals = {{Rational(-3), Rational(3)}, {Rational(-3), Rational(7)}};
    ex.t_samples = 4000;
    ex.expected_crossings = 0;
    ex.notes = "degenerate straight segment";
    return ex;
}

CrossingReport crossing_complement_report(const CrossingExample& ex) {
    const Box& box = ex.image_box;
    const unsigned N = box.resolution;
    std::vector<std::uint8_t> curve_cells(static_cast<std::size_t>(N) * N, 0);

    auto cell_of = [&](unsigned axis, const Rational& v) -> long long {
        const auto& [lo, hi] = box.intervals[axis];
        // floor(N * (v - lo) / (hi - lo))
        Rational scaled = Rational(N) * (v - lo) / (hi - lo);
        Integer idx = numerator(scaled) / denominator(scaled);
        if (numerator(scaled) < 0 && idx * denominator(scaled) != numerator(scaled)) idx -= 1;
        return idx.convert_to<long long>();
    };

    std::vector<Rational> pt(1);
    for (unsigned s = 0; s <= ex.t_samples; ++s) {
        pt[0] = ex.t_lo + (ex.t_hi - ex.t_lo) * Rational(s, ex.t_samples);
        long long cx = cell_of(0, ex.curve[0].eval(pt));
        long long cy = cell_of(1, ex.curve[1].eval(pt));
        // One-cell dilation: a 3x3 stamp leaves no diagonal leak through the
        // rasterized barrier.
        for (long long dx = -1; dx <= 1; ++dx) {
            for (long long dy = -1; dy <= 1; ++dy) {
                long long ix = cx + dx, iy = cy + dy;
                if (ix < 0 || iy < 0 || ix >= N || iy >= N) continue;
                curve_cells[static_cast<std::size_t>(ix) * N + static_cast<std::size_t>(iy)] = 1;
            }
        }
    }

    // Face-adjacency union-find over the complement.
    std::vector<std::size_t> parent(curve_cells.size());
    for (std::size_t i = 0; i < parent.size(); ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t a) {
        while (parent[a] != a) {
            parent[a] = parent[parent[a]];
            a = parent[a];
        }
        return a;
    };
    auto unite = [&](std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[a] = b;
    };
    for (unsigned ix = 0; ix < N; ++ix) {
        for (unsigned iy = 0; iy < N; ++iy) {
            std::size_t i = static_cast<std::size_t>(ix) * N + iy;
            if (curve_cells[i]) continue;
            if (ix + 1 < N && !curve_cells[i + N]) unite(i, i + N);
            if (iy + 1 < N && !curve_cells[i + 1]) unite(i, i + 1);
        }
    }

    // Near-tangent strand overlaps can pinch off single-cell pockets of the
    // complement; they shrink with resolution and are raster noise, not
    // regions.  A region counts only if it contains a cell whose whole 3x3
    // neighborhood is empty (out-of-box counts as empty).
    std::set<std::size_t> roots;
    for (long long ix = 0; ix < N; ++ix) {
        for (long long iy = 0; iy < N; ++iy) {
            std::size_t i = static_cast<std::size_t>(ix) * N + iy;
            if (curve_cells[i]) continue;
            bool interior = true;
            for (long long dx = -1; dx <= 1 && interior; ++dx)
                for (long long dy = -1; dy <= 1 && interior; ++dy) {
                    long long jx = ix + dx, jy = iy + dy;
                    if (jx < 0 || jy < 0 || jx >= N || jy >= N) continue;
                    if (curve_cells[static_cast<std::size_t>(jx) * N + jy]) interior = false;
                }
            if (interior) roots.insert(find(i));
        }
    }

    CrossingReport report;
    report.complement_components = roots.size();
    report.crossing_number = roots.size() > 1 ? roots.size() - 1 : 0;
    return report;
}

std::size_t sampled_mismatch_count(const Tree& t, const Dnf& f, std::size_t count,
                                   std::uint64_t seed) {
    if (t.arity != f.arity) throw std::invalid_argument("tree/formula arity mismatch");
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long long> num(-300, 300);
    std::uniform_int_distribution<long long> den(1, 50);
    std::vector<Rational> pt(t.arity);
    std::size_t mismatches = 0;
    for (std::size_t i = 0; i < count; ++i) {
        for (auto& c : pt) c = Rational(num(rng), den(rng));
        if (evaluate(t, pt).accepted != eval_formula(f, pt)) ++mismatches;
    }
    return mismatches;
}

}  // namespace actk
