#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace nlh {

/// Exact rational scalar. mpq_class keeps values canonical (gcd 1, positive
/// denominator) as long as constructions go through parse_rational or
/// arithmetic.
using Rational = mpq_class;

/// Parses `p`, `-p`, `+p` or `p/q` with decimal integers. Throws
/// std::invalid_argument on malformed input or a zero denominator.
Rational parse_rational(std::string_view text);

/// `p` when the denominator is 1, otherwise `p/q`.
std::string to_string(const Rational& value);

}  // namespace nlh
