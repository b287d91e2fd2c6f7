#ifndef ACTK_TREE_BUILDER_HPP
#define ACTK_TREE_BUILDER_HPP

#include <functional>

#include "actk/tree.hpp"

namespace actk {

/// Incremental tree construction with generated vertex ids.
class TreeBuilder {
public:
    explicit TreeBuilder(unsigned arity) { tree_.arity = arity; }

    VertexId add(Vertex v) {
        VertexId id = "v" + std::to_string(counter_++);
        tree_.vertices.emplace(id, std::move(v));
        return id;
    }

    VertexId leaf(bool accept) { return add(LeafVertex{accept}); }

    void set_next(const VertexId& comp, const VertexId& next) {
        std::get<ComputationVertex>(tree_.vertices.at(comp)).next = next;
    }

    Tree take(VertexId root) {
        tree_.root = std::move(root);
        return std::move(tree_);
    }

    Tree& tree() { return tree_; }

private:
    Tree tree_;
    std::size_t counter_ = 0;
};

using InputRemap = std::function<unsigned(unsigned)>;
using LeafRedirect = std::function<std::optional<VertexId>(bool accept)>;

/// Copies the subtree of `src` rooted at `src_root` into the builder,
/// remapping input indices and optionally redirecting leaves to existing
/// vertices.  Shared subtrees stay shared (one copy per source vertex).
VertexId copy_subtree(TreeBuilder& b, const Tree& src, const VertexId& src_root,
                      const InputRemap& input_remap = nullptr,
                      const LeafRedirect& leaf_redirect = nullptr);

}  // namespace actk

#endif
