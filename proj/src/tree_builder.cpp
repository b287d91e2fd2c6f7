#include "actk/tree_builder.hpp"

namespace actk {

VertexId copy_subtree(TreeBuilder& b, const Tree& src, const VertexId& src_root,
                      const InputRemap& input_remap, const LeafRedirect& leaf_redirect) {
    std::unordered_map<VertexId, VertexId> map;
    auto remap_operand = [&](const Operand& op) -> Operand {
        if (const auto* in = std::get_if<InputOperand>(&op))
            return InputOperand{input_remap ? input_remap(in->index) : in->index};
        if (const auto* var = std::get_if<VarOperand>(&op)) return VarOperand{map.at(var->vertex)};
        return op;
    };
    auto walk = [&](auto&& self, const VertexId& id) -> VertexId {
        auto it = map.find(id);
        if (it != map.end()) return it->second;
        const Vertex& v = src.at(id);
        if (const auto* leaf = std::get_if<LeafVertex>(&v)) {
            if (leaf_redirect) {
                if (auto target = leaf_redirect(leaf->accept)) {
                    map.emplace(id, *target);
                    return *target;
                }
            }
            VertexId nid = b.leaf(leaf->accept);
            map.emplace(id, nid);
            return nid;
        }
        if (const auto* c = std::get_if<ComputationVertex>(&v)) {
            // Operands reference predecessors, so remap before the child.
            ComputationVertex nc{c->op, remap_operand(c->left), remap_operand(c->right), {}};
            VertexId nid = b.add(nc);
            map.emplace(id, nid);
            VertexId next = self(self, c->next);
            b.set_next(nid, next);
            return nid;
        }
        const auto& br = std::get<BranchVertex>(v);
        BranchVertex nb{remap_operand(br.test), {}, {}, {}};
        VertexId nid = b.add(nb);
        map.emplace(id, nid);
        VertexId gt = self(self, br.gt);
        VertexId eq = self(self, br.eq);
        VertexId lt = self(self, br.lt);
        auto& stored = std::get<BranchVertex>(b.tree().vertices.at(nid));
        stored.gt = gt;
        stored.eq = eq;
        stored.lt = lt;
        return nid;
    };
    return walk(walk, src_root);
}

}  // namespace actk
