#include "actk/extract.hpp"

namespace actk {

namespace {

class Expander {
public:
    Expander(const Tree& t, const ExtractOptions& opt) : tree_(t), opt_(opt) {}

    const Polynomial& vertex_poly(const VertexId& id) {
        auto it = memo_.find(id);
        if (it != memo_.end()) return it->second;
        const auto* c = std::get_if<ComputationVertex>(&tree_.at(id));
        if (!c) throw std::invalid_argument("vertex '" + id + "' is not a computation vertex");
        Polynomial a = operand_poly(c->left);
        Polynomial b = operand_poly(c->right);
        Polynomial p(tree_.arity);
        switch (c->op) {
            case ArithOp::Add: p = a + b; break;
            case ArithOp::Sub: p = a - b; break;
            case ArithOp::Mul: p = a * b; break;
        }
        if (p.terms().size() > opt_.term_limit)
            throw ResourceLimitError("expanded polynomial exceeds term limit at vertex '" + id + "'");
        return memo_.emplace(id, std::move(p)).first->second;
    }

    Polynomial operand_poly(const Operand& op) {
        if (const auto* c = std::get_if<ConstOperand>(&op))
            return Polynomial::constant(tree_.arity, c->value);
        if (const auto* in = std::get_if<InputOperand>(&op))
            return Polynomial::variable(tree_.arity, in->index);
        return vertex_poly(std::get<VarOperand>(op).vertex);
    }

private:
    const Tree& tree_;
    const ExtractOptions& opt_;
    std::unordered_map<VertexId, Polynomial> memo_;
};

bool reachable_from_root(const Tree& t, const VertexId& target) {
    std::vector<VertexId> stack{t.root};
    std::unordered_map<VertexId, bool> seen;
    while (!stack.empty()) {
        VertexId id = std::move(stack.back());
        stack.pop_back();
        if (seen[id]) continue;
        seen[id] = true;
        if (id == target) return true;
        const Vertex& v = t.at(id);
        if (const auto* c = std::get_if<ComputationVertex>(&v)) stack.push_back(c->next);
        else if (const auto* b = std::get_if<BranchVertex>(&v)) {
            stack.push_back(b->gt);
            stack.push_back(b->eq);
            stack.push_back(b->lt);
        }
    }
    return false;
}

}  // namespace

Polynomial vertex_polynomial(const Tree& t, const VertexId& v, const ExtractOptions& opt) {
    if (!reachable_from_root(t, v))
        throw std::invalid_argument("vertex '" + v + "' is not reachable from the root");
    const Vertex& vert = t.at(v);
    if (std::holds_alternative<LeafVertex>(vert))
        throw std::invalid_argument("vertex '" + v + "' is a leaf");
    Expander ex(t, opt);
    if (const auto* b = std::get_if<BranchVertex>(&vert)) return ex.operand_poly(b->test);
    return ex.vertex_poly(v);
}

Dnf leaf_dnf(const Tree& t, const ExtractOptions& opt) {
    Dnf f;
    f.arity = t.arity;
    Expander ex(t, opt);
    // Logical-path DFS; shared subtrees are unfolded.
    std::vector<SignCondition> path;
    auto walk = [&](auto&& self, const VertexId& id) -> void {
        const Vertex& v = t.at(id);
        if (const auto* leaf = std::get_if<LeafVertex>(&v)) {
            if (leaf->accept) {
                BasicSet b;
                b.conds = path;
                b.leaf_id = id;
                f.disjuncts.push_back(std::move(b));
            }
            return;
        }
        if (const auto* c = std::get_if<ComputationVertex>(&v)) {
            self(self, c->next);
            return;
        }
        const auto& b = std::get<BranchVertex>(v);
        Polynomial test = ex.operand_poly(b.test);
        for (auto [sign, child] : {std::pair{Sign::GT, &b.gt}, {Sign::EQ, &b.eq}, {Sign::LT, &b.lt}}) {
            path.push_back({test, sign});
            self(self, *child);
            path.pop_back();
        }
    };
    walk(walk, t.root);
    return f;
}

}  // namespace actk
