#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace zeck {

using BigInt = boost::multiprecision::cpp_int;

/// Position within a representation. Negative values address the implicit
/// infinity places.
using Index = std::int64_t;

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Parses an optionally signed decimal integer. Throws std::invalid_argument.
BigInt parse_bigint(const std::string& text);

}  // namespace zeck
