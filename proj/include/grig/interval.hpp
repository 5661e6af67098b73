#pragma once

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <stdexcept>

#include "grig/rational.hpp"

namespace grig {

// ---------------------------------------------------------------------------
// Rational interval arithmetic.
//
// Endpoints are exact rationals, so the only "rounding" is the deliberate
// outward coarsening to a dyadic grid that keeps numerators small.  Every
// operation returns an interval containing the exact result; enclosures of
// ln and exp carry explicit series tail bounds.
// ---------------------------------------------------------------------------

struct RatInterval {
    Rat lo, hi;

    RatInterval() : lo(0), hi(0) {}
    explicit RatInterval(const Rat& x) : lo(x), hi(x) {}
    RatInterval(Rat l, Rat h) : lo(std::move(l)), hi(std::move(h)) {
        if (lo > hi) throw std::logic_error("inverted interval");
    }

    Rat width() const { return hi - lo; }
    Rat mid() const { return (lo + hi) / 2; }
    bool contains(const Rat& x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0 && 0 <= hi; }
    bool is_point() const { return lo == hi; }
    Rat mag() const { return std::max(rat_abs(lo), rat_abs(hi)); }

    RatInterval round_out(unsigned bits) const {
        return {dyadic_floor(lo, bits), dyadic_ceil(hi, bits)};
    }
};

inline RatInterval operator+(const RatInterval& a, const RatInterval& b) {
    return {a.lo + b.lo, a.hi + b.hi};
}
inline RatInterval operator-(const RatInterval& a, const RatInterval& b) {
    return {a.lo - b.hi, a.hi - b.lo};
}
inline RatInterval operator-(const RatInterval& a) { return {-a.hi, -a.lo}; }

inline RatInterval operator*(const RatInterval& a, const RatInterval& b) {
    Rat p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
    return {std::min(std::min(p1, p2), std::min(p3, p4)),
            std::max(std::max(p1, p2), std::max(p3, p4))};
}

inline RatInterval operator*(const Rat& s, const RatInterval& a) {
    return s >= 0 ? RatInterval{s * a.lo, s * a.hi} : RatInterval{s * a.hi, s * a.lo};
}

inline RatInterval operator/(const RatInterval& a, const RatInterval& b) {
    if (b.contains_zero()) throw std::domain_error("interval division by an interval containing zero");
    RatInterval inv{Rat(1) / b.hi, Rat(1) / b.lo};
    return a * inv;
}

inline RatInterval hull(const RatInterval& a, const RatInterval& b) {
    return {std::min(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline RatInterval widen(const RatInterval& a, const Rat& eps) {
    return {a.lo - eps, a.hi + eps};
}

// ---------------------------------------------------------------------------
// ApproxReal: a validated enclosure of a real number.  The represented exact
// quantity always lies in [value-radius, value+radius]; refinement only ever
// shrinks the interval.
// ---------------------------------------------------------------------------

class ApproxReal {
public:
    ApproxReal() = default;
    explicit ApproxReal(RatInterval iv) : iv_(std::move(iv)) {}
    explicit ApproxReal(const Rat& exact) : iv_(exact) {}

    const RatInterval& interval() const { return iv_; }
    Rat value() const { return iv_.mid(); }
    Rat radius() const { return iv_.width() / 2; }

    double value_as_double() const { return static_cast<double>(value()); }

private:
    RatInterval iv_;
};

namespace detail {

// atanh series: atanh(z) = sum z^(2j+1)/(2j+1), |z| < 1.
// Returns an enclosure; requires |z| <= 1/3 so the tail bound is cheap.
// The running power is itself an interval, so coarsening stays rigorous.
inline RatInterval atanh_enclosure(const Rat& z, unsigned work_bits) {
    if (rat_abs(z) > Rat(1, 3) + Rat(1, 100))
        throw std::logic_error("atanh argument out of the reduced range");
    const RatInterval z2(z * z);
    const Rat tol(1, pow2(work_bits + 4));
    RatInterval sum{Rat(0), Rat(0)};
    RatInterval zpow(z);  // encloses z^(2j+1)
    unsigned j = 0;
    for (;;) {
        sum = (sum + Rat(1, 2 * j + 1) * zpow).round_out(work_bits + 8);
        zpow = (zpow * z2).round_out(work_bits + 24);
        ++j;
        // remaining terms: sum_{i>=j} z^(2i+1)/(2i+1), geometric bound
        Rat tail = zpow.mag() / (Rat(2 * j + 1) * (Rat(1) - z2.hi));
        if (tail < tol) return widen(sum, tail);
        if (j > 4096) throw std::logic_error("atanh series failed to converge");
    }
}

}  // namespace detail

// Enclosure of ln(2) = 2*atanh(1/3), cached per precision.
inline RatInterval ln2_enclosure(unsigned bits) {
    static std::map<unsigned, RatInterval> cache;
    static std::mutex mtx;
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(bits);
    if (it != cache.end()) return it->second;
    RatInterval r = Rat(2) * detail::atanh_enclosure(Rat(1, 3), bits + 8);
    cache.emplace(bits, r);
    return r;
}

// Enclosure of ln(x) for exact rational x > 0.
inline RatInterval ln_enclosure(const Rat& x, unsigned bits) {
    if (x <= 0) throw std::domain_error("ln of a non-positive number");
    const unsigned wb = bits + 16;
    // reduce to m in [3/4, 3/2): x = m * 2^k
    Rat m = x;
    long k = 0;
    while (m >= Rat(3, 2)) { m /= 2; ++k; }
    while (m < Rat(3, 4)) { m *= 2; --k; }
    // ln m = 2*atanh((m-1)/(m+1)), argument bounded by 1/5
    Rat z = (m - 1) / (m + 1);
    RatInterval lnm = Rat(2) * detail::atanh_enclosure(z, wb);
    if (k == 0) return lnm;
    RatInterval kln2 = Rat(k) * ln2_enclosure(wb);
    return (lnm + kln2).round_out(wb);
}

// Monotone extension of ln to intervals.
inline RatInterval ln_interval(const RatInterval& x, unsigned bits) {
    if (x.lo <= 0) throw std::domain_error("ln of an interval reaching zero");
    return {ln_enclosure(x.lo, bits).lo, ln_enclosure(x.hi, bits).hi};
}

// Enclosure of exp(x) for exact rational x.
inline RatInterval exp_enclosure(const Rat& x, unsigned bits) {
    const unsigned wb = bits + 16;
    // reduce |m| <= 1/2 with x = m * 2^k, then square k times
    Rat m = x;
    unsigned k = 0;
    while (rat_abs(m) > Rat(1, 2)) { m /= 2; ++k; }
    const Rat tol(1, pow2(wb + 4));
    const RatInterval mi(m);
    RatInterval sum(Rat(1));
    RatInterval term(m);  // encloses m^j / j!
    unsigned j = 1;
    for (;;) {
        sum = (sum + term).round_out(wb + 8);
        ++j;
        term = (Rat(1, j) * (term * mi)).round_out(wb + 24);
        // |m| <= 1/2 and j >= 2, so the remaining series is dominated by
        // a geometric series with ratio <= 1/4
        Rat tail = term.mag() * 2;
        if (tail < tol) {
            sum = widen(sum, tail);
            break;
        }
        if (j > 4096) throw std::logic_error("exp series failed to converge");
    }
    if (sum.lo <= 0) throw std::logic_error("exp enclosure lost positivity");
    for (unsigned i = 0; i < k; ++i)
        sum = RatInterval{sum.lo * sum.lo, sum.hi * sum.hi}.round_out(wb + 8);
    return sum;
}

inline RatInterval exp_interval(const RatInterval& x, unsigned bits) {
    return {exp_enclosure(x.lo, bits).lo, exp_enclosure(x.hi, bits).hi};
}

// Enclosure of base^expo = exp(expo * ln base) for base > 0.
inline RatInterval pow_interval(const RatInterval& base, const RatInterval& expo, unsigned bits) {
    RatInterval ln_b = ln_interval(base, bits + 8);
    RatInterval prod = (expo * ln_b).round_out(bits + 16);
    return exp_interval(prod, bits);
}

}  // namespace grig
