#ifndef ACTK_PROBLEMS_HPP
#define ACTK_PROBLEMS_HPP

#include "actk/topology.hpp"
#include "actk/transforms.hpp"

namespace actk {

/// A matched problem instance: a tree and a strict formula deciding the same
/// set, with a schedule/box/resolution known to work for the homology engine.
struct ProblemBundle {
    Tree tree;
    Dnf strict_dnf;
    Schedule suggested_schedule;
    Box suggested_box;
    std::size_t declared_height_bound = 0;
    std::string notes;
};

/// Lattice parity set on {1..m}^n: all open 2-faces plus all vertices.
/// The tree classifies each coordinate by binary search and accepts when the
/// number of non-integer coordinates is 0 or exactly 2.
ProblemBundle parity_problem(unsigned n, unsigned m);

/// The expected first Betti number of the compactified parity set for n = 2:
/// one hole per interior lattice edge.
std::size_t parity_expected_b1(unsigned m);

/// All-distinct test via the single product of pairwise differences.
ProblemBundle distinctness_tree(unsigned n);

/// The smallest nontrivial projection instance: the unit circle in R^2
/// projected to [-1, 1], with the fiber-product shapes W_0 and W_1.
struct CircleFiberExample {
    Tree sigma_tree;            // decides x^2 + y^2 - 1 = 0
    Dnf sigma_strict_dnf;
    Dnf projection_strict_dnf;  // [-1, 1] as {1-x^2 > 0} or {1-x^2 = 0}
    FiberSpec w0;               // p = 0
    FiberSpec w1;               // p = 1
    Schedule schedule;
    Box w0_box;     // 2D
    Box w1_box;     // 3D
    Box image_box;  // 1D
};

CircleFiberExample circle_fiber_example();

/// A polynomial interval curve in R^3 whose planar projection has a fixed
/// number of transverse double points, plus the grid oracle that counts the
/// complement regions of the thickened projected image.
struct CrossingExample {
    std::vector<Polynomial> curve;  // x(t), y(t), z(t), each arity 1
    Rational t_lo, t_hi;
    Box image_box;  // 2D box for the projected image
    unsigned t_samples = 0;
    unsigned expected_crossings = 0;
    std::string notes;
};

CrossingExample crossing_number_example();
/// Degenerate instance: a straight segment (no double points).
CrossingExample crossing_segment_example();

struct CrossingReport {
    std::size_t complement_components = 0;  // unreduced region count
    std::size_t crossing_number = 0;        // components - 1 (open-arc case)
};

/// Rasterizes the (x, y) image of the curve onto the box grid (with one-cell
/// dilation so the barrier has no diagonal leaks) and counts connected
/// components of the complement under face adjacency.
CrossingReport crossing_complement_report(const CrossingExample& ex);

/// Draws `count` exact rational points (bounded numerators/denominators) and
/// returns how many of them the tree and the formula disagree on.
std::size_t sampled_mismatch_count(const Tree& t, const Dnf& f, std::size_t count,
                                   std::uint64_t seed);

}  // namespace actk

#endif
