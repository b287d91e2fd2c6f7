#ifndef ACTK_BOUNDS_HPP
#define ACTK_BOUNDS_HPP

#include <map>

#include "actk/rational.hpp"

namespace actk {

/// The absolute constants of the lower-bound formulas.  They are inputs, not
/// derived values: every result computed with them is parametric.
struct BoundParams {
    Rational c1 = 1;
    Rational c2 = 1;
};

/// log2 as an exact rational: exact for powers of two, otherwise a dyadic
/// approximation within 2^-40 (well under the documented 1e-6 precision).
Rational log2_approx(const Integer& b);

/// c1*log2(b) - c2*n (total Borel-Moore Betti number bound shape).
Rational yao_lower(const Integer& b_total, unsigned n, const BoundParams& p);

/// c1*log2(b_m)/(m+1) - c2*n.
Rational main_lower(const Integer& bm, unsigned m, unsigned n, const BoundParams& p);

/// c1*log2(b_m(projection))/(m+1)^2 - c2*n/(m+1).
Rational proj_lower(const Integer& bm, unsigned m, unsigned n, const BoundParams& p);

/// The two Betti upper bounds (C*s^2*d)^n and (C*(m+1)*s*d)^n for a set
/// defined by s distinct polynomials of degree at most d.
std::pair<Rational, Rational> total_betti_upper(const Integer& s, const Integer& d, unsigned n,
                                                unsigned m, const Rational& C);

/// Least k >= 1 with C*n*((k*3^k)^2*2^k)^n >= b: inverts the counting bound
/// on the total Betti number of a height-k tree's set.
unsigned invert_height_bound(const Integer& b, unsigned n, const Rational& C);

struct ProjectionCheck {
    bool holds = false;
    Integer sum;    // sum of b_q(W_p) over p+q=m
    Integer slack;  // sum - b_m(Y)
    bool m_zero_factor_flagged = false;  // the literal m-factor comparison degenerates at m=0
};

/// Verifies b_m(Y) <= sum over p+q=m of b_q(W_p); the table maps p -> b_q(W_p)
/// with q = m-p and must cover every p in 0..m.
ProjectionCheck projection_inequality_check(const std::map<unsigned, Integer>& betti_w, unsigned m,
                                            const Integer& betti_target);

}  // namespace actk

#endif
