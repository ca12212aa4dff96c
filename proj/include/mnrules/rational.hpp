#ifndef MNRULES_RATIONAL_HPP
#define MNRULES_RATIONAL_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace mnr {

/// Exact rational coefficient. Always kept in lowest terms.
using Rational = mpq_class;

/// "p/q" in lowest terms, "p" when the denominator is 1.
std::string to_string(const Rational& q);

/// p/q reduced. mpq_class(p, q) alone does not reduce.
inline Rational ratio(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

/// Inverse of to_string; also accepts a leading '+' and surrounding spaces.
/// Throws std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

} // namespace mnr

#endif
