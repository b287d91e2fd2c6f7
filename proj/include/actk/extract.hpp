#ifndef ACTK_EXTRACT_HPP
#define ACTK_EXTRACT_HPP

#include "actk/formula.hpp"
#include "actk/tree.hpp"

namespace actk {

/// Thrown when a resource guard trips (term or cell limits); the CLI maps
/// this to exit code 2.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExtractOptions {
    std::size_t term_limit = 1'000'000;  // abort if any expanded polynomial exceeds this
};

/// Expands the value of a computation vertex (or a branch vertex's test) as a
/// polynomial in the input variables.  Expansion can blow up exponentially;
/// the term guard aborts past the limit.
Polynomial vertex_polynomial(const Tree& t, const VertexId& v, const ExtractOptions& opt = {});

/// The semialgebraic set decided by the tree, as one basic set per Yes leaf:
/// the expanded branch conditions accumulated along the root-to-leaf path.
Dnf leaf_dnf(const Tree& t, const ExtractOptions& opt = {});

}  // namespace actk

#endif
