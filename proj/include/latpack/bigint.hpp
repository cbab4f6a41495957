#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace latpack {

using BigInt = boost::multiprecision::cpp_int;
using BigVector = std::vector<BigInt>;

/// Natural logarithm of a positive big integer, accurate to double precision
/// for any magnitude (no overflow through conversion).
double log_big(const BigInt& value);

/// Converts to double; values beyond the double range saturate to +-inf.
double to_double(const BigInt& value);

/// True when the value fits in a signed 64-bit integer.
bool fits_int64(const BigInt& value);

inline std::string to_string(const BigInt& value) { return value.str(); }

BigInt dot(const BigVector& a, const BigVector& b);

}  // namespace latpack
