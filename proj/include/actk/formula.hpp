#ifndef ACTK_FORMULA_HPP
#define ACTK_FORMULA_HPP

#include <optional>
#include <string>
#include <vector>

#include "actk/polynomial.hpp"

namespace actk {

/// Sign of a single polynomial constraint.  LT/EQ/GT come from branch
/// outcomes; LE/GE only ever appear after compactification.
enum class Sign { LT, EQ, GT, LE, GE };

const char* sign_name(Sign s);
Sign sign_from_name(const std::string& s);
bool is_strict(Sign s);

struct SignCondition {
    Polynomial poly;
    Sign sign;

    bool holds_at(std::span<const Rational> x) const;
};

/// Conjunction of sign conditions; an empty list is all of R^n.
struct BasicSet {
    std::vector<SignCondition> conds;
    std::optional<std::string> leaf_id;  // provenance when extracted from a tree
};

/// Finite union of basic sets; an empty union is the empty set.
struct Dnf {
    unsigned arity = 0;
    std::vector<BasicSet> disjuncts;
};

struct DnfStats {
    std::size_t distinct_polynomials = 0;  // s, up to canonical-form equality
    unsigned max_degree = 0;               // d
    std::size_t disjunct_count = 0;
    std::size_t max_conds_per_disjunct = 0;
};

/// Exact membership: OR over disjuncts of AND over conditions.
bool eval_formula(const Dnf& f, std::span<const Rational> x);

DnfStats dnf_stats(const Dnf& f);

std::string emit_dnf_json(const Dnf& f);
Dnf parse_dnf_json(const std::string& text);

}  // namespace actk

#endif
