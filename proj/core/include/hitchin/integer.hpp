#pragma once

#include <gmpxx.h>

#include <string>

namespace hitchin {

/// Arbitrary-precision integer used for every exact computation.
using Integer = mpz_class;

inline std::string to_decimal(const Integer& value) { return value.get_str(10); }

/// Throws hitchin::Error(InvalidArgument) when `text` is not a base-10 integer.
Integer parse_integer(const std::string& text);

}  // namespace hitchin
