#include "actk/tree.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace actk {

using json = nlohmann::ordered_json;

const Vertex& Tree::at(const VertexId& id) const {
    auto it = vertices.find(id);
    if (it == vertices.end()) throw std::out_of_range("unknown vertex id: " + id);
    return it->second;
}

namespace {

void collect_child_ids(const Vertex& v, std::vector<VertexId>& out) {
    out.clear();
    if (const auto* c = std::get_if<ComputationVertex>(&v)) {
        out.push_back(c->next);
    } else if (const auto* b = std::get_if<BranchVertex>(&v)) {
        out.push_back(b->gt);
        out.push_back(b->eq);
        out.push_back(b->lt);
    }
}

std::vector<const Operand*> operands_of(const Vertex& v) {
    if (const auto* c = std::get_if<ComputationVertex>(&v)) return {&c->left, &c->right};
    if (const auto* b = std::get_if<BranchVertex>(&v)) return {&b->test};
    return {};
}

}  // namespace

std::vector<std::string> validate_tree(const Tree& t) {
    std::vector<std::string> diags;
    if (!t.vertices.count(t.root)) {
        diags.push_back("root id '" + t.root + "' is not in the vertex table");
        return diags;
    }

    // Reachability, dangling references and cycle detection (iterative DFS).
    enum Color { White, Gray, Black };
    std::unordered_map<VertexId, Color> color;
    std::vector<VertexId> order;  // reverse postorder accumulates here
    {
        struct Frame { VertexId id; std::size_t next_child; std::vector<VertexId> children; };
        std::vector<Frame> stack;
        std::vector<VertexId> kids;
        auto push = [&](const VertexId& id) {
            color[id] = Gray;
            collect_child_ids(t.vertices.at(id), kids);
            stack.push_back({id, 0, kids});
        };
        push(t.root);
        bool cycle_reported = false;
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next_child == f.children.size()) {
                color[f.id] = Black;
                order.push_back(f.id);
                stack.pop_back();
                continue;
            }
            const VertexId child = f.children[f.next_child++];
            auto it = t.vertices.find(child);
            if (it == t.vertices.end()) {
                diags.push_back("vertex '" + f.id + "' references unknown id '" + child + "'");
                continue;
            }
            auto c = color.find(child);
            if (c == color.end()) {
                push(child);
            } else if (c->second == Gray && !cycle_reported) {
                diags.push_back("cycle through vertex '" + child + "'");
                cycle_reported = true;
            }
        }
    }
    std::reverse(order.begin(), order.end());  // now topological (parents first)

    // Per-vertex local checks on reachable vertices.
    for (const auto& id : order) {
        const Vertex& v = t.vertices.at(id);
        for (const Operand* op : operands_of(v)) {
            if (const auto* in = std::get_if<InputOperand>(op)) {
                if (in->index >= t.arity)
                    diags.push_back("vertex '" + id + "' uses input index " +
                                    std::to_string(in->index + 1) + " but arity is " +
                                    std::to_string(t.arity));
            }
        }
    }

    // Predecessor rule: a Var operand at v must name a computation vertex
    // lying on *every* root path to v.  avail(v) is the intersection over all
    // parents of (avail(parent) + parent-if-computation), computed in
    // topological order over the reachable DAG.
    std::unordered_map<VertexId, std::set<VertexId>> avail;
    std::unordered_map<VertexId, bool> seen;
    avail[t.root] = {};
    seen[t.root] = true;
    std::vector<VertexId> kids;
    for (const auto& id : order) {
        if (!seen.count(id)) continue;  // unreachable via valid edges
        const Vertex& v = t.vertices.at(id);
        std::set<VertexId> down = avail[id];
        if (std::holds_alternative<ComputationVertex>(v)) down.insert(id);
        collect_child_ids(v, kids);
        for (const auto& child : kids) {
            if (!t.vertices.count(child)) continue;
            auto it = avail.find(child);
            if (it == avail.end()) {
                avail[child] = down;
                seen[child] = true;
            } else {
                std::set<VertexId> inter;
                std::set_intersection(it->second.begin(), it->second.end(), down.begin(),
                                      down.end(), std::inserter(inter, inter.begin()));
                it->second = std::move(inter);
            }
        }
    }
    for (const auto& id : order) {
        const Vertex& v = t.vertices.at(id);
        for (const Operand* op : operands_of(v)) {
            const auto* var = std::get_if<VarOperand>(op);
            if (!var) continue;
            auto target = t.vertices.find(var->vertex);
            if (target == t.vertices.end()) {
                diags.push_back("vertex '" + id + "' references unknown variable vertex '" +
                                var->vertex + "'");
                continue;
            }
            if (!std::holds_alternative<ComputationVertex>(target->second)) {
                diags.push_back("vertex '" + id + "' takes the value of non-computation vertex '" +
                                var->vertex + "'");
                continue;
            }
            if (!avail[id].count(var->vertex))
                diags.push_back("vertex '" + id + "' uses variable of vertex '" + var->vertex +
                                "' which is not a predecessor on every root path");
        }
    }
    return diags;
}

EvalResult evaluate(const Tree& t, std::span<const Rational> x) {
    if (x.size() != t.arity) throw std::invalid_argument("input point arity mismatch");
    std::unordered_map<VertexId, Rational> values;  // computation vertices on the path
    auto operand_value = [&](const Operand& op) -> Rational {
        if (const auto* c = std::get_if<ConstOperand>(&op)) return c->value;
        if (const auto* in = std::get_if<InputOperand>(&op)) {
            if (in->index >= t.arity) throw std::invalid_argument("input index out of range");
            return x[in->index];
        }
        const auto& var = std::get<VarOperand>(op);
        auto it = values.find(var.vertex);
        if (it == values.end())
            throw std::invalid_argument("variable vertex '" + var.vertex + "' not yet computed");
        return it->second;
    };

    EvalResult res;
    VertexId cur = t.root;
    for (;;) {
        ++res.path_length;
        const Vertex& v = t.at(cur);
        if (const auto* leaf = std::get_if<LeafVertex>(&v)) {
            res.accepted = leaf->accept;
            res.leaf = cur;
            return res;
        }
        if (const auto* c = std::get_if<ComputationVertex>(&v)) {
            Rational a = operand_value(c->left);
            Rational b = operand_value(c->right);
            Rational y;
            switch (c->op) {
                case ArithOp::Add: y = a + b; break;
                case ArithOp::Sub: y = a - b; break;
                case ArithOp::Mul: y = a * b; break;
            }
            values[cur] = std::move(y);
            cur = c->next;
            continue;
        }
        const auto& b = std::get<BranchVertex>(v);
        int s = sign_of(operand_value(b.test));
        cur = s > 0 ? b.gt : (s == 0 ? b.eq : b.lt);
    }
}

namespace {

struct MetricsEntry {
    std::size_t height = 0;
    Integer leaves = 0;
    Integer yes = 0;
    std::size_t mult_max = 0;
};

MetricsEntry metrics_dfs(const Tree& t, const VertexId& id,
                         std::unordered_map<VertexId, MetricsEntry>& memo) {
    auto it = memo.find(id);
    if (it != memo.end()) return it->second;
    const Vertex& v = t.at(id);
    MetricsEntry e;
    if (const auto* leaf = std::get_if<LeafVertex>(&v)) {
        e = {1, 1, leaf->accept ? 1 : 0, 0};
    } else if (const auto* c = std::get_if<ComputationVertex>(&v)) {
        MetricsEntry sub = metrics_dfs(t, c->next, memo);
        e.height = sub.height + 1;
        e.leaves = sub.leaves;
        e.yes = sub.yes;
        e.mult_max = sub.mult_max + (c->op == ArithOp::Mul ? 1 : 0);
    } else {
        const auto& b = std::get<BranchVertex>(v);
        for (const auto& child : {b.gt, b.eq, b.lt}) {
            MetricsEntry sub = metrics_dfs(t, child, memo);
            e.height = std::max(e.height, sub.height);
            e.mult_max = std::max(e.mult_max, sub.mult_max);
            e.leaves += sub.leaves;
            e.yes += sub.yes;
        }
        e.height += 1;
    }
    memo.emplace(id, e);
    return e;
}

}  // namespace

TreeMetrics tree_metrics(const Tree& t) {
    std::unordered_map<VertexId, MetricsEntry> memo;
    MetricsEntry e = metrics_dfs(t, t.root, memo);
    return {e.height, e.leaves, e.yes, e.mult_max};
}

namespace {

json operand_to_json(const Operand& op) {
    if (const auto* c = std::get_if<ConstOperand>(&op)) return json{{"const", format_rational(c->value)}};
    if (const auto* in = std::get_if<InputOperand>(&op)) return json{{"input", in->index + 1}};
    return json{{"var", std::get<VarOperand>(op).vertex}};
}

Operand operand_from_json(const json& j) {
    if (j.contains("const")) return ConstOperand{parse_rational(j.at("const").get<std::string>())};
    if (j.contains("input")) {
        long long i = j.at("input").get<long long>();
        if (i < 1) throw std::invalid_argument("input index must be >= 1");
        return InputOperand{static_cast<unsigned>(i - 1)};
    }
    if (j.contains("var")) return VarOperand{j.at("var").get<std::string>()};
    throw std::invalid_argument("operand must be one of const/input/var");
}

const char* op_name(ArithOp op) {
    switch (op) {
        case ArithOp::Add: return "add";
        case ArithOp::Sub: return "sub";
        case ArithOp::Mul: return "mul";
    }
    return "?";
}

ArithOp op_from_name(const std::string& s) {
    if (s == "add") return ArithOp::Add;
    if (s == "sub") return ArithOp::Sub;
    if (s == "mul") return ArithOp::Mul;
    if (s == "div") throw std::invalid_argument("division vertices are not permitted");
    throw std::invalid_argument("unknown arithmetic op: " + s);
}

}  // namespace

std::string emit_tree_json(const Tree& t) {
    json out;
    out["inputs"] = t.arity;
    out["root"] = t.root;
    std::vector<VertexId> ids;
    ids.reserve(t.vertices.size());
    for (const auto& [id, v] : t.vertices) ids.push_back(id);
    std::sort(ids.begin(), ids.end());
    json verts = json::array();
    for (const auto& id : ids) {
        const Vertex& v = t.vertices.at(id);
        json rec;
        rec["id"] = id;
        if (const auto* c = std::get_if<ComputationVertex>(&v)) {
            rec["kind"] = "computation";
            rec["op"] = op_name(c->op);
            rec["left"] = operand_to_json(c->left);
            rec["right"] = operand_to_json(c->right);
            rec["next"] = c->next;
        } else if (const auto* b = std::get_if<BranchVertex>(&v)) {
            rec["kind"] = "branch";
            rec["test"] = operand_to_json(b->test);
            rec["gt"] = b->gt;
            rec["eq"] = b->eq;
            rec["lt"] = b->lt;
        } else {
            rec["kind"] = "leaf";
            rec["accept"] = std::get<LeafVertex>(v).accept;
        }
        verts.push_back(std::move(rec));
    }
    out["vertices"] = std::move(verts);
    return out.dump(2) + "\n";
}

Tree parse_tree_json(const std::string& text) {
    json j = json::parse(text);
    Tree t;
    t.arity = j.at("inputs").get<unsigned>();
    t.root = j.at("root").get<std::string>();
    for (const auto& rec : j.at("vertices")) {
        VertexId id = rec.at("id").get<std::string>();
        std::string kind = rec.at("kind").get<std::string>();
        Vertex v;
        if (kind == "computation") {
            v = ComputationVertex{op_from_name(rec.at("op").get<std::string>()),
                                  operand_from_json(rec.at("left")),
                                  operand_from_json(rec.at("right")),
                                  rec.at("next").get<std::string>()};
        } else if (kind == "branch") {
            v = BranchVertex{operand_from_json(rec.at("test")), rec.at("gt").get<std::string>(),
                             rec.at("eq").get<std::string>(), rec.at("lt").get<std::string>()};
        } else if (kind == "leaf") {
            v = LeafVertex{rec.at("accept").get<bool>()};
        } else {
            throw std::invalid_argument("unknown vertex kind: " + kind);
        }
        if (!t.vertices.emplace(std::move(id), std::move(v)).second)
            throw std::invalid_argument("duplicate vertex id in tree file");
    }
    return t;
}

}  // namespace actk
