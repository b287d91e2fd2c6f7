#ifndef ACTK_TRANSFORMS_HPP
#define ACTK_TRANSFORMS_HPP

#include "actk/families.hpp"
#include "actk/tree.hpp"

namespace actk {

/// Fiber-product shape: the source set lives in R^n, the projection drops the
/// last r coordinates, and the product has p+1 factors.  The product tree has
/// arity (n-r) + (p+1)*r.
struct FiberSpec {
    unsigned n = 0;
    unsigned r = 0;
    unsigned p = 0;

    unsigned product_arity() const { return (n - r) + (p + 1) * r; }
};

/// Accepts x iff t1 or t2 accepts x.  Height at most height(t1)+height(t2).
Tree union_tree(const Tree& t1, const Tree& t2);

/// Accepts x iff both t1 and t2 accept x.
Tree intersect_tree(const Tree& t1, const Tree& t2);

/// Tree deciding the compact eps-delta closure of the set decided by t: every
/// branch is replaced by the margin gadget (f >= delta / f <= -delta /
/// f^2 <= eps) and the whole tree is guarded by the ball |x|^2 <= 1/delta.
/// Semantically equal to closure_delta_eps(leaf_dnf(t), delta, eps, Unbounded).
/// Height at most 7*height(t) + 2n + 2.
Tree eps_delta_tree(const Tree& t, const EpsDelta& ed);

/// Tree deciding the union of eps-delta closures over every schedule level,
/// with |x|^2 computed once in a shared prefix.  Height at most
/// 7*(l+1)*height(t) + 2n + 2*(l+1) + 2 for l+1 levels.
Tree t_ell_tree(const Tree& t, const Schedule& sched);

/// Tree for the (p+1)-fold fiber product: accepts (x, y_1, ..., y_{p+1}) iff
/// tm accepts (x, y_j) for every j.  Height at most (p+1)*height(tm), with
/// equality when the deepest path of tm ends at a Yes leaf.
Tree fiber_product_tree(const Tree& tm, const FiberSpec& spec);

}  // namespace actk

#endif
