#include "actk/transforms.hpp"

#include "actk/tree_builder.hpp"

namespace actk {

namespace {

void require_valid(const Tree& t, const char* what) {
    auto diags = validate_tree(t);
    if (!diags.empty())
        throw std::invalid_argument(std::string(what) + ": invalid input tree: " + diags.front());
}

Tree combine(const Tree& t1, const Tree& t2, bool redirect_accept, const char* what) {
    require_valid(t1, what);
    require_valid(t2, what);
    if (t1.arity != t2.arity) throw std::invalid_argument(std::string(what) + ": arity mismatch");
    TreeBuilder b(t1.arity);
    VertexId second = copy_subtree(b, t2, t2.root, nullptr, nullptr);
    VertexId root = copy_subtree(b, t1, t1.root, nullptr,
                                 [&](bool accept) -> std::optional<VertexId> {
                                     if (accept == redirect_accept) return second;
                                     return std::nullopt;
                                 });
    return b.take(root);
}

/// Emits the chain of computation vertices for h = X_1^2 + ... + X_n^2.
/// Returns {first vertex id, h vertex id}; the caller wires the final `next`.
struct Prefix { VertexId entry; VertexId h_var; VertexId tail; };

Prefix build_norm_prefix(TreeBuilder& b, unsigned arity) {
    std::vector<VertexId> squares;
    VertexId first;
    VertexId prev;
    auto chain = [&](Vertex v) {
        VertexId id = b.add(std::move(v));
        if (first.empty()) first = id;
        else std::get<ComputationVertex>(b.tree().vertices.at(prev)).next = id;
        prev = id;
        return id;
    };
    for (unsigned i = 0; i < arity; ++i)
        squares.push_back(chain(ComputationVertex{ArithOp::Mul, InputOperand{i}, InputOperand{i}, {}}));
    VertexId acc = squares[0];
    for (unsigned i = 1; i < arity; ++i)
        acc = chain(ComputationVertex{ArithOp::Add, VarOperand{acc}, VarOperand{squares[i]}, {}});
    return {first, acc, prev};
}

/// Appends one eps-delta level: the ball test on the precomputed h variable
/// followed by the margin-gadget transform of t.  Every reject outcome leads
/// to `no_continuation` (the next level, or a final No leaf).
VertexId append_eps_delta_level(TreeBuilder& b, const Tree& t, const EpsDelta& ed,
                                const VertexId& h_var, const VertexId& no_continuation) {
    if (ed.eps <= 0 || ed.delta <= 0) throw std::invalid_argument("eps and delta must be positive");

    std::unordered_map<VertexId, VertexId> map;  // source id -> transformed id
    auto remap_operand = [&](const Operand& op) -> Operand {
        if (const auto* var = std::get_if<VarOperand>(&op)) return VarOperand{map.at(var->vertex)};
        return op;
    };

    auto walk = [&](auto&& self, const VertexId& id) -> VertexId {
        auto it = map.find(id);
        if (it != map.end()) return it->second;
        const Vertex& v = t.at(id);
        if (const auto* leaf = std::get_if<LeafVertex>(&v)) {
            VertexId nid = leaf->accept ? b.leaf(true) : no_continuation;
            map.emplace(id, nid);
            return nid;
        }
        if (const auto* c = std::get_if<ComputationVertex>(&v)) {
            VertexId nid = b.add(ComputationVertex{c->op, remap_operand(c->left),
                                                   remap_operand(c->right), {}});
            map.emplace(id, nid);
            std::get<ComputationVertex>(b.tree().vertices.at(nid)).next = self(self, c->next);
            return nid;
        }
        // Branch on f becomes the three-test margin gadget:
        //   f - delta        > 0 or = 0  -> original ">0" subtree
        //   -f - delta       > 0 or = 0  -> original "<0" subtree
        //   f^2 - eps        < 0 or = 0  -> original "=0" subtree, else reject
        const auto& br = std::get<BranchVertex>(v);
        Operand f = remap_operand(br.test);
        VertexId g = self(self, br.gt);
        VertexId e = self(self, br.eq);
        VertexId l = self(self, br.lt);

        VertexId sq = b.add(ComputationVertex{ArithOp::Mul, f, f, {}});
        VertexId sq_eps =
            b.add(ComputationVertex{ArithOp::Sub, VarOperand{sq}, ConstOperand{ed.eps}, {}});
        VertexId b3 = b.add(BranchVertex{VarOperand{sq_eps}, no_continuation, e, e});
        std::get<ComputationVertex>(b.tree().vertices.at(sq)).next = sq_eps;
        std::get<ComputationVertex>(b.tree().vertices.at(sq_eps)).next = b3;

        VertexId neg =
            b.add(ComputationVertex{ArithOp::Sub, ConstOperand{-ed.delta}, f, sq});
        VertexId b2 = b.add(BranchVertex{VarOperand{neg}, l, l, sq});
        std::get<ComputationVertex>(b.tree().vertices.at(neg)).next = b2;

        VertexId fm =
            b.add(ComputationVertex{ArithOp::Sub, f, ConstOperand{ed.delta}, neg});
        VertexId b1 = b.add(BranchVertex{VarOperand{fm}, g, g, neg});
        std::get<ComputationVertex>(b.tree().vertices.at(fm)).next = b1;

        map.emplace(id, fm);
        return fm;
    };

    VertexId body = walk(walk, t.root);
    VertexId ball = b.add(ComputationVertex{
        ArithOp::Sub, VarOperand{h_var}, ConstOperand{Rational(1) / ed.delta}, {}});
    VertexId root_branch = b.add(BranchVertex{VarOperand{ball}, no_continuation, body, body});
    std::get<ComputationVertex>(b.tree().vertices.at(ball)).next = root_branch;
    return ball;
}

}  // namespace

Tree union_tree(const Tree& t1, const Tree& t2) { return combine(t1, t2, false, "union_tree"); }

Tree intersect_tree(const Tree& t1, const Tree& t2) {
    return combine(t1, t2, true, "intersect_tree");
}

Tree eps_delta_tree(const Tree& t, const EpsDelta& ed) {
    Schedule one;
    one.levels.push_back(ed);
    return t_ell_tree(t, one);
}

Tree t_ell_tree(const Tree& t, const Schedule& sched) {
    require_valid(t, "t_ell_tree");
    if (sched.levels.empty()) throw std::invalid_argument("t_ell_tree: schedule has no levels");
    TreeBuilder b(t.arity);
    Prefix prefix = build_norm_prefix(b, t.arity);
    VertexId cont = b.leaf(false);
    for (auto it = sched.levels.rbegin(); it != sched.levels.rend(); ++it)
        cont = append_eps_delta_level(b, t, *it, prefix.h_var, cont);
    std::get<ComputationVertex>(b.tree().vertices.at(prefix.tail)).next = cont;
    return b.take(prefix.entry);
}

Tree fiber_product_tree(const Tree& tm, const FiberSpec& spec) {
    require_valid(tm, "fiber_product_tree");
    if (spec.r == 0 || spec.r >= spec.n)
        throw std::invalid_argument("fiber_product_tree: need 0 < r < n");
    if (tm.arity != spec.n)
        throw std::invalid_argument("fiber_product_tree: tree arity does not match spec.n");

    const unsigned base = spec.n - spec.r;
    TreeBuilder b(spec.product_arity());
    std::optional<VertexId> next_factor;
    VertexId root;
    for (unsigned j = spec.p + 1; j >= 1; --j) {
        InputRemap remap = [&, j](unsigned i) -> unsigned {
            if (i < base) return i;
            return base + (j - 1) * spec.r + (i - base);
        };
        LeafRedirect redirect = nullptr;
        if (next_factor) {
            // A Yes leaf of this factor hands over to the next factor through
            // a pass-through computation vertex, keeping per-factor path
            // lengths equal to the factor's own height.
            VertexId target = *next_factor;
            redirect = [&b, target](bool accept) -> std::optional<VertexId> {
                if (!accept) return std::nullopt;
                return b.add(ComputationVertex{ArithOp::Add, ConstOperand{Rational(0)},
                                               ConstOperand{Rational(0)}, target});
            };
        }
        root = copy_subtree(b, tm, tm.root, remap, redirect);
        next_factor = root;
    }
    return b.take(root);
}

}  // namespace actk
