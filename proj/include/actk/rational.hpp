#ifndef ACTK_RATIONAL_HPP
#define ACTK_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace actk {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Sign of an exact rational: -1, 0, or +1.
inline int sign_of(const Rational& r) { return r.sign(); }

/// Parse "p", "-p" or "p/q" (decimal integer strings, q > 0 after normalization).
Rational parse_rational(const std::string& s);

/// Emit "p" or "p/q" in lowest terms, denominator positive.
std::string format_rational(const Rational& r);

}  // namespace actk

#endif
