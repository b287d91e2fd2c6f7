#ifndef ACTK_FAMILIES_HPP
#define ACTK_FAMILIES_HPP

#include "actk/formula.hpp"

namespace actk {

struct EpsDelta {
    Rational eps;
    Rational delta;
};

/// The parameter sequence eps_0, delta_0, ..., eps_l, delta_l driving the
/// compact approximations; must interleave strictly below 1.
struct Schedule {
    std::vector<EpsDelta> levels;
};

/// Bounded: the set already lives in a fixed ball, no extra conjunct needed.
/// Unbounded: each level gains the ball condition |x|^2 <= 1/delta.
struct AmbientMode {
    enum class Kind { Bounded, Unbounded } kind = Kind::Unbounded;
    Rational ball_radius_sq = 0;  // Bounded only; metadata for callers

    static AmbientMode bounded(const Rational& radius_sq);
    static AmbientMode unbounded() { return {}; }
};

/// Relax strict inequalities by a margin: h>0 becomes h-delta >= 0 and h<0
/// becomes -h-delta >= 0; equations are kept.  Inputs must be strict-only.
Dnf closure_delta(const Dnf& f, const Rational& delta, const AmbientMode& mode);

/// As closure_delta, additionally thickening equations: h=0 becomes
/// h^2-eps <= 0.  The result carries no strict signs.
Dnf closure_delta_eps(const Dnf& f, const Rational& delta, const Rational& eps,
                      const AmbientMode& mode);

/// Union of closure_delta_eps over every level of the schedule.
Dnf t_m_formula(const Dnf& f, const Schedule& sched, const AmbientMode& mode);

/// Checks strict interleaving eps_0 < delta_0 < eps_1 < ... < delta_l < 1 and
/// that each consecutive ratio is at least R (> 1).  Empty result = valid.
std::vector<std::string> validate_schedule(const Schedule& sched, const Rational& ratio);

/// Parses "eps0,delta0,eps1,delta1,..." with exact-rational entries.
Schedule parse_schedule(const std::string& text);

}  // namespace actk

#endif
