#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace grig {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int pow2(unsigned bits) { return Int(1) << bits; }

inline Rat rat_abs(const Rat& x) { return x < 0 ? Rat(-x) : x; }

// floor(a/b) for b > 0, rounding toward -infinity
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b, r = a % b;
    if (r != 0 && a < 0) --q;
    return q;
}

inline Int rat_floor(const Rat& x) {
    return floor_div(numerator(x), denominator(x));
}

inline Int rat_ceil(const Rat& x) {
    Int f = rat_floor(x);
    return f + (Rat(f) == x ? 0 : 1);
}

inline bool is_integer(const Rat& x) { return denominator(x) == 1; }

// Dyadic bracketing on the grid 2^-bits; used to keep interval endpoints small.
inline Rat dyadic_floor(const Rat& x, unsigned bits) {
    return Rat(floor_div(numerator(x) << bits, denominator(x)), pow2(bits));
}

inline Rat dyadic_ceil(const Rat& x, unsigned bits) {
    Rat f = dyadic_floor(x, bits);
    if (f == x) return f;
    return f + Rat(1, pow2(bits));
}

// "p/q" or "p"; exact input only -- decimals are rejected, not rounded.
inline Rat parse_rational(const std::string& s) {
    if (s.empty()) throw std::invalid_argument("empty rational literal");
    if (s.find_first_of(".eE") != std::string::npos)
        throw std::invalid_argument("decimal literals are not accepted, write an exact fraction p/q: " + s);
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("zero denominator: " + s);
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational literal: " + s);
    }
}

inline std::string render_rational(const Rat& x) {
    std::string s = numerator(x).str();
    if (denominator(x) != 1) s += "/" + denominator(x).str();
    return s;
}

// Exact decimal rendering (round toward zero), independent of any float path.
inline std::string decimal_string(const Rat& x, unsigned digits) {
    Int num = numerator(x), den = denominator(x);
    bool neg = num < 0;
    if (neg) num = -num;
    Int ip = num / den;
    Int rem = num % den;
    std::string out = (neg && (ip != 0 || rem != 0) ? "-" : "") + ip.str();
    if (digits == 0) return out;
    out += '.';
    for (unsigned i = 0; i < digits; ++i) {
        rem *= 10;
        out += char('0' + int(rem / den));
        rem %= den;
    }
    return out;
}

}  // namespace grig
