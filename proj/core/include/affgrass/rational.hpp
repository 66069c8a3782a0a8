#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace affgrass {

// Exact rationals. gmpxx keeps every result in lowest terms with a
// positive denominator.
using Rational = mpq_class;

inline bool is_zero(const Rational& q) { return sgn(q) == 0; }

// "p" when the denominator is 1, "p/q" otherwise.
std::string to_string(const Rational& q);

// Accepts "p" or "p/q" with q > 0; throws ParseError on anything else.
Rational parse_rational(std::string_view text);

} // namespace affgrass
