#ifndef ACTK_TREE_HPP
#define ACTK_TREE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "actk/rational.hpp"

namespace actk {

using VertexId = std::string;

/// Arithmetic at computation vertices.  Division is deliberately absent.
enum class ArithOp { Add, Sub, Mul };

/// An operand at a computation or branch vertex: a rational constant, one of
/// the input variables X_1..X_n (stored 0-based), or the value of a
/// predecessor computation vertex.
struct ConstOperand { Rational value; };
struct InputOperand { unsigned index = 0; };
struct VarOperand { VertexId vertex; };
using Operand = std::variant<ConstOperand, InputOperand, VarOperand>;

struct ComputationVertex {
    ArithOp op = ArithOp::Add;
    Operand left;
    Operand right;
    VertexId next;
};

/// Three-way sign branch on the value of `test`.
struct BranchVertex {
    Operand test;
    VertexId gt;
    VertexId eq;
    VertexId lt;
};

struct LeafVertex { bool accept = false; };

using Vertex = std::variant<ComputationVertex, BranchVertex, LeafVertex>;

/// An algebraic computation tree.  The vertex table may physically share
/// identical subtrees (a vertex can have several parents); semantics, height
/// and leaf counts are always those of the logical unfolding.  No cycles.
struct Tree {
    unsigned arity = 0;
    VertexId root;
    std::unordered_map<VertexId, Vertex> vertices;

    const Vertex& at(const VertexId& id) const;
};

struct EvalResult {
    bool accepted = false;
    VertexId leaf;
    std::size_t path_length = 0;  // vertices visited, root and leaf included
};

struct TreeMetrics {
    std::size_t height = 0;          // vertices on the longest root-to-leaf path
    Integer leaf_count = 0;          // logical leaves (path count)
    Integer yes_leaf_count = 0;
    std::size_t mult_count_max = 0;  // most multiplications on any root path
};

/// Structural validation per the tree model: every violation is reported as
/// one diagnostic string; an empty list means the tree is valid.
std::vector<std::string> validate_tree(const Tree& t);

/// Runs the tree on an exact rational input point.
EvalResult evaluate(const Tree& t, std::span<const Rational> x);

TreeMetrics tree_metrics(const Tree& t);

/// JSON tree file format; parse(emit(t)) is the identity on canonical files.
std::string emit_tree_json(const Tree& t);
Tree parse_tree_json(const std::string& text);

}  // namespace actk

#endif
