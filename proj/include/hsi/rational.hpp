#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace hsi {

using Q = mpq_class;

/// Parses "p/q" or an integer literal. Throws ParseError on anything else,
/// including decimal or exponent notation.
Q parse_rational(std::string_view token);

std::string to_string(const Q& x);

inline int sign(const Q& x) { return sgn(x); }

inline double to_double(const Q& x) { return x.get_d(); }

}  // namespace hsi
