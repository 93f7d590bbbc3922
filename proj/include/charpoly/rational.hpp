#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace charpoly {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
// Single switch point: flip these aliases to the gmp-backed types if the
// header-only backend ever becomes the bottleneck.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int rat_num(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int rat_den(const Rat& r) { return boost::multiprecision::denominator(r); }

inline Int factorial(unsigned n) {
    Int f = 1;
    for (unsigned i = 2; i <= n; ++i) f *= i;
    return f;
}

// binomial(n, k) for integer n (n may be negative only through the Rat overloads)
inline Int binomial(const Int& n, unsigned k) {
    if (n < 0) return 0;  // integer combinatorial counts only
    if (Int(k) > n) return 0;
    Int r = 1;
    for (unsigned i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);  // exact at every step
    }
    return r;
}

inline Int int_pow(Int base, unsigned e) {
    Int r = 1;
    while (e) {
        if (e & 1u) r *= base;
        base *= base;
        e >>= 1u;
    }
    return r;
}

inline Rat rat_pow(const Rat& base, int e) {
    if (e >= 0) {
        Rat r = 1;
        for (int i = 0; i < e; ++i) r *= base;
        return r;
    }
    Rat r = 1;
    for (int i = 0; i < -e; ++i) r *= base;
    return Rat(1) / r;
}

inline Rat rat_abs(const Rat& r) { return r < 0 ? Rat(-r) : r; }

// true iff r is an integer
inline bool rat_is_int(const Rat& r) { return rat_den(r) == 1; }

inline std::string int_to_string(const Int& v) { return v.str(); }

// "num/den" (or just "num" when den == 1); used by text output
inline std::string rat_to_string(const Rat& r) {
    if (rat_is_int(r)) return rat_num(r).str();
    return rat_num(r).str() + "/" + rat_den(r).str();
}

// Fixed-point decimal rendering (truncated toward zero), display only --
// all comparisons stay exact.
inline std::string rat_to_decimal(const Rat& r, unsigned digits = 20) {
    const bool neg = r < 0;
    Int num = rat_num(r), den = rat_den(r);
    if (num < 0) num = -num;
    Int whole = num / den, rem = num % den;
    std::string s = (neg ? "-" : "") + whole.str();
    if (digits == 0) return s;
    s += '.';
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        s += static_cast<char>('0' + static_cast<int>(rem / den));
        rem %= den;
    }
    return s;
}

}  // namespace charpoly
