#pragma once

// Software big-float and big-integer types used by every analytic quantity.
// cpp_bin_float is implemented entirely with integer arithmetic, so results
// are bit-identical across compilers and platforms.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace chilab {

/// 128-bit binary mantissa.
using Real = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<128, boost::multiprecision::digit_base_2>,
    boost::multiprecision::et_off>;

using BigInt = boost::multiprecision::cpp_int;

inline constexpr int kRealMantissaBits = 128;

Real ln2();
Real log2(const Real& v);
Real log2(const BigInt& v);
Real exp2(const Real& v);

/// Largest integer <= v.
BigInt floor_to_int(const Real& v);

/// Decimal rendering with `digits` significant digits (scientific when large).
std::string to_decimal(const Real& v, int digits = 36);

/// Exact hexadecimal float rendering, e.g. "0x1.8p+1" for 3.
std::string to_hex(const Real& v);

/// Inverse of to_hex; throws DomainError on malformed input.
Real from_hex(const std::string& text);

std::string to_string(const BigInt& v);

/// Parses decimal integers and the shorthand "1e12" / "10^12".
BigInt parse_bigint(const std::string& text);

}  // namespace chilab
