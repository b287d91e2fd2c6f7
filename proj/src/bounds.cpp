#include "actk/bounds.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace actk {

namespace {

using BigFloat = boost::multiprecision::cpp_bin_float_100;

}  // namespace

Rational log2_approx(const Integer& b) {
    if (b < 1) throw std::invalid_argument("log2 requires a positive integer");
    // Exact when b is a power of two.
    Integer x = b;
    unsigned e = 0;
    while (x % 2 == 0) {
        x /= 2;
        ++e;
    }
    if (x == 1) return Rational(e);
    BigFloat v = log(BigFloat(b)) / log(BigFloat(2));
    const Integer scale = Integer(1) << 40;
    Integer num = static_cast<Integer>(floor(v * BigFloat(scale) + BigFloat(1) / 2));
    return Rational(num, scale);
}

Rational yao_lower(const Integer& b_total, unsigned n, const BoundParams& p) {
    if (p.c1 <= 0 || p.c2 <= 0) throw std::invalid_argument("bound constants must be positive");
    return p.c1 * log2_approx(b_total) - p.c2 * Rational(n);
}

Rational main_lower(const Integer& bm, unsigned m, unsigned n, const BoundParams& p) {
    if (p.c1 <= 0 || p.c2 <= 0) throw std::invalid_argument("bound constants must be positive");
    return p.c1 * log2_approx(bm) / Rational(m + 1) - p.c2 * Rational(n);
}

Rational proj_lower(const Integer& bm, unsigned m, unsigned n, const BoundParams& p) {
    if (p.c1 <= 0 || p.c2 <= 0) throw std::invalid_argument("bound constants must be positive");
    const Rational m1(m + 1);
    return p.c1 * log2_approx(bm) / (m1 * m1) - p.c2 * Rational(n) / m1;
}

std::pair<Rational, Rational> total_betti_upper(const Integer& s, const Integer& d, unsigned n,
                                                unsigned m, const Rational& C) {
    if (s < 1 || d < 1) throw std::invalid_argument("s and d must be at least 1");
    auto pow_n = [n](Rational base) {
        Rational r(1);
        for (unsigned i = 0; i < n; ++i) r *= base;
        return r;
    };
    Rational first = pow_n(C * Rational(s * s * d));
    Rational second = pow_n(C * Rational(Integer(m + 1) * s * d));
    return {first, second};
}

unsigned invert_height_bound(const Integer& b, unsigned n, const Rational& C) {
    if (b < 1 || C <= 0) throw std::invalid_argument("need b >= 1 and C > 0");
    Integer pow3 = 3;  // 3^k
    Integer pow2 = 2;  // 2^k
    for (unsigned k = 1;; ++k) {
        Integer base = Integer(k) * pow3;
        Integer value = base * base * pow2;
        Rational total = C * Rational(n);
        for (unsigned i = 0; i < n; ++i) total *= Rational(value);
        if (total >= b) return k;
        pow3 *= 3;
        pow2 *= 2;
    }
}

ProjectionCheck projection_inequality_check(const std::map<unsigned, Integer>& betti_w, unsigned m,
                                            const Integer& betti_target) {
    ProjectionCheck out;
    Integer sum = 0;
    for (unsigned p = 0; p <= m; ++p) {
        auto it = betti_w.find(p);
        if (it == betti_w.end())
            throw std::invalid_argument("betti table is missing p = " + std::to_string(p));
        if (it->second < 0) throw std::invalid_argument("betti numbers are nonnegative");
        sum += it->second;
    }
    out.sum = sum;
    out.slack = sum - betti_target;
    out.holds = betti_target <= sum;
    // The proof's interpolation step multiplies by m, which degenerates at
    // m = 0; flag it so reports can say max(m,1) was used there.
    out.m_zero_factor_flagged = (m == 0);
    return out;
}

}  // namespace actk
