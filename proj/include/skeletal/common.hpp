#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace skeletal {

// Lattice coordinate type. All in-scope workloads stay far below the int64
// range; arithmetic that could conceivably overflow goes through the checked
// helpers below so an overflow is an error, never silent wraparound.
using Coord = std::int64_t;

// Precondition violation (bad argument, malformed file, domain error).
class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A requested computation would exceed an explicit size/node budget.
class BudgetError : public std::runtime_error {
public:
    BudgetError(const std::string& what, std::int64_t estimated, std::int64_t cap)
        : std::runtime_error(what), estimated(estimated), cap(cap) {}
    std::int64_t estimated;
    std::int64_t cap;
};

// Integer arithmetic left the representable range.
class OverflowError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline Coord checked_add(Coord a, Coord b) {
    Coord r;
    if (__builtin_add_overflow(a, b, &r)) throw OverflowError("integer overflow in addition");
    return r;
}

inline Coord checked_mul(Coord a, Coord b) {
    Coord r;
    if (__builtin_mul_overflow(a, b, &r)) throw OverflowError("integer overflow in multiplication");
    return r;
}

// base^exp with overflow detection; exp >= 0.
inline Coord ipow_checked(Coord base, int exp) {
    if (exp < 0) throw ValidationError("ipow_checked: negative exponent");
    Coord r = 1;
    for (int e = 0; e < exp; ++e) r = checked_mul(r, base);
    return r;
}

}  // namespace skeletal
