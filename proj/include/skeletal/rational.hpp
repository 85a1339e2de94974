#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "skeletal/common.hpp"

namespace skeletal {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "num/den" with den >= 1 (e.g. "3/4", "-7/8", "5/1").
inline std::string rational_to_string(const Rational& q) {
    std::string s = numerator(q).str();
    s += '/';
    s += denominator(q).str();
    return s;
}

// Accepts "p/q", plain integers, and decimal/scientific literals such as
// "0.125" or "1e-9" (all parsed exactly; no floating point involved).
Rational rational_from_string(std::string_view text);

// Floor division (round toward negative infinity), b != 0.
inline BigInt floor_div(const BigInt& a, const BigInt& b) {
    BigInt q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline BigInt rational_floor(const Rational& q) {
    return floor_div(numerator(q), denominator(q));
}

// Safe conversion for reporting: exact division at extended precision first,
// so ratios of astronomically large numerator/denominator pairs still land on
// the nearest double instead of overflowing.
inline double rational_to_double(const Rational& q) {
    using Float = boost::multiprecision::cpp_bin_float_50;
    Float n(numerator(q));
    Float d(denominator(q));
    return (n / d).convert_to<double>();
}

}  // namespace skeletal
