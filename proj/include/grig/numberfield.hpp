#pragma once

#include <array>
#include <compare>
#include <mutex>
#include <stdexcept>
#include <string>

#include "grig/interval.hpp"
#include "grig/rational.hpp"

namespace grig {

// ---------------------------------------------------------------------------
// Exact arithmetic in the real cubic field Q(eta), where eta ~ 0.8105 is the
// real root of  X^3 + X^2 + X - 2.
//
// Elements are stored as c0 + c1*eta + c2*eta^2 with exact rational
// coefficients; reduction uses eta^3 = 2 - eta - eta^2 and eta^4 = 3*eta - 2.
// Equality is coefficientwise; strict order is decided by sign evaluation
// over a rational isolating interval of eta, refined by bisection.
// ---------------------------------------------------------------------------

struct divide_by_zero_error : std::domain_error {
    divide_by_zero_error() : std::domain_error("division by zero in Q(eta)") {}
};

namespace detail {

// p(x) = x^3 + x^2 + x - 2, exact
inline Rat minpoly(const Rat& x) { return x * x * x + x * x + x - 2; }

// Isolating interval for eta, starting from (4/5, 5/6) where the minimal
// polynomial changes sign.  The cache only ever shrinks.
class EtaCache {
public:
    RatInterval at_least(unsigned bits) {
        std::lock_guard<std::mutex> lock(mtx_);
        const Rat target(1, pow2(bits));
        while (iv_.width() > target) {
            Rat m = iv_.mid();
            Rat pm = minpoly(m);
            if (pm == 0) throw std::logic_error("eta cannot be rational");
            // p is increasing through the root: p(lo) < 0 < p(hi)
            if (pm < 0)
                iv_.lo = m;
            else
                iv_.hi = m;
            // keep endpoints small; only ever move them inward so intervals
            // handed out earlier always contain later ones
            if ((++steps_ & 15u) == 0) {
                Rat lo = dyadic_ceil(iv_.lo, bits + 8);
                Rat hi = dyadic_floor(iv_.hi, bits + 8);
                if (lo < hi && minpoly(lo) < 0 && minpoly(hi) > 0)
                    iv_ = RatInterval{lo, hi};
            }
        }
        return iv_;
    }

private:
    std::mutex mtx_;
    RatInterval iv_{Rat(4, 5), Rat(5, 6)};
    unsigned steps_ = 0;
};

inline EtaCache& eta_cache() {
    static EtaCache cache;
    return cache;
}

}  // namespace detail

inline RatInterval eta_interval(unsigned bits) { return detail::eta_cache().at_least(bits); }

namespace detail {

// Fixed-point bracket eta*2^64 in [lo, hi], for the fast sign path.
struct EtaFixedBracket {
    Int lo, hi, lo_sq, hi_sq;
};

inline const EtaFixedBracket& eta_fixed() {
    static const EtaFixedBracket bracket = [] {
        RatInterval iv = eta_interval(96);
        Int lo = floor_div(numerator(iv.lo) << 64, denominator(iv.lo));
        Int hi = -floor_div(-(numerator(iv.hi) << 64), denominator(iv.hi));
        return EtaFixedBracket{lo, hi, lo * lo, hi * hi};
    }();
    return bracket;
}

}  // namespace detail

class FieldElement {
public:
    FieldElement() : c_{Rat(0), Rat(0), Rat(0)} {}
    FieldElement(Rat c0, Rat c1, Rat c2) : c_{std::move(c0), std::move(c1), std::move(c2)} {}
    /* implicit */ FieldElement(const Rat& c0) : c_{c0, Rat(0), Rat(0)} {}
    /* implicit */ FieldElement(int c0) : c_{Rat(c0), Rat(0), Rat(0)} {}

    static FieldElement eta() { return {Rat(0), Rat(1), Rat(0)}; }

    const Rat& c0() const { return c_[0]; }
    const Rat& c1() const { return c_[1]; }
    const Rat& c2() const { return c_[2]; }

    bool is_zero() const { return c_[0] == 0 && c_[1] == 0 && c_[2] == 0; }
    bool is_rational() const { return c_[1] == 0 && c_[2] == 0; }

    friend bool operator==(const FieldElement& x, const FieldElement& y) { return x.c_ == y.c_; }

    friend FieldElement operator+(const FieldElement& x, const FieldElement& y) {
        return {x.c_[0] + y.c_[0], x.c_[1] + y.c_[1], x.c_[2] + y.c_[2]};
    }
    friend FieldElement operator-(const FieldElement& x, const FieldElement& y) {
        return {x.c_[0] - y.c_[0], x.c_[1] - y.c_[1], x.c_[2] - y.c_[2]};
    }
    friend FieldElement operator-(const FieldElement& x) { return {-x.c_[0], -x.c_[1], -x.c_[2]}; }

    friend FieldElement operator*(const FieldElement& x, const FieldElement& y) {
        const Rat& a0 = x.c_[0]; const Rat& a1 = x.c_[1]; const Rat& a2 = x.c_[2];
        const Rat& b0 = y.c_[0]; const Rat& b1 = y.c_[1]; const Rat& b2 = y.c_[2];
        Rat t3 = a1 * b2 + a2 * b1;  // eta^3 coefficient
        Rat t4 = a2 * b2;            // eta^4 coefficient
        return {a0 * b0 + 2 * t3 - 2 * t4,
                a0 * b1 + a1 * b0 - t3 + 3 * t4,
                a0 * b2 + a1 * b1 + a2 * b0 - t3};
    }

    // Unique z with y*z = x, by Cramer's rule on the multiplication matrix of y.
    friend FieldElement operator/(const FieldElement& x, const FieldElement& y) {
        if (y.is_zero()) throw divide_by_zero_error{};
        const Rat& y0 = y.c_[0]; const Rat& y1 = y.c_[1]; const Rat& y2 = y.c_[2];
        // columns of M_y in the basis 1, eta, eta^2
        std::array<std::array<Rat, 3>, 3> M{{
            {y0, 2 * y2, 2 * y1 - 2 * y2},
            {y1, y0 - y2, -y1 + 3 * y2},
            {y2, y1 - y2, y0 - y1},
        }};
        auto det3 = [](const std::array<std::array<Rat, 3>, 3>& m) {
            return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                   m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                   m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        };
        Rat D = det3(M);
        if (D == 0) throw std::logic_error("singular multiplication matrix for a nonzero element");
        std::array<Rat, 3> z;
        for (int j = 0; j < 3; ++j) {
            auto Mj = M;
            for (int i = 0; i < 3; ++i) Mj[i][j] = x.c_[i];
            z[j] = det3(Mj) / D;
        }
        return {z[0], z[1], z[2]};
    }

    FieldElement& operator+=(const FieldElement& y) { return *this = *this + y; }
    FieldElement& operator-=(const FieldElement& y) { return *this = *this - y; }
    FieldElement& operator*=(const FieldElement& y) { return *this = *this * y; }
    FieldElement& operator/=(const FieldElement& y) { return *this = *this / y; }

    // Sign of the real value; exact (bisection of the isolating interval
    // terminates because a nonzero element has nonzero real value).
    int sign() const {
        if (is_zero()) return 0;
        if (is_rational()) return c_[0] < 0 ? -1 : 1;

        // fast path: clear denominators and evaluate the integer bracket
        // D*x*2^128 in [lo, hi] with eta*2^64 pinned to 64 bits
        {
            static const Int two64 = Int(1) << 64;
            static const Int two128 = Int(1) << 128;
            const auto& br = detail::eta_fixed();
            Int q0 = denominator(c_[0]), q1 = denominator(c_[1]), q2 = denominator(c_[2]);
            Int A = numerator(c_[0]) * q1 * q2;
            Int B = numerator(c_[1]) * q0 * q2;
            Int C = numerator(c_[2]) * q0 * q1;
            Int lo = A * two128, hi = lo;
            if (B != 0) {
                lo += B * (B > 0 ? br.lo : br.hi) * two64;
                hi += B * (B > 0 ? br.hi : br.lo) * two64;
            }
            if (C != 0) {
                lo += C * (C > 0 ? br.lo_sq : br.hi_sq);
                hi += C * (C > 0 ? br.hi_sq : br.lo_sq);
            }
            if (lo > 0) return 1;
            if (hi < 0) return -1;
        }

        for (unsigned bits = 128;; bits *= 2) {
            RatInterval e = eta_interval(bits);
            RatInterval v = evaluate(e);
            if (v.lo > 0) return 1;
            if (v.hi < 0) return -1;
            if (bits > (1u << 20))
                throw std::logic_error("sign refinement failed to separate from zero");
        }
    }

    friend std::strong_ordering operator<=>(const FieldElement& x, const FieldElement& y) {
        if (x == y) return std::strong_ordering::equal;
        int s = (x - y).sign();
        return s < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    // Enclosure with radius <= 2^-bits * max(1, |value|).
    ApproxReal to_approx(unsigned bits) const {
        if (is_rational()) return ApproxReal(c_[0]);
        for (unsigned wb = bits + 8;; wb *= 2) {
            RatInterval v = evaluate(eta_interval(wb));
            Rat rad = v.width() / 2;
            Rat scale = std::max(Rat(1), rat_abs(v.mid()));
            if (rad * pow2(bits) <= scale) return ApproxReal(v);
        }
    }

    std::string render() const {
        return render_rational(c_[0]) + " + " + render_rational(c_[1]) + "*x + " +
               render_rational(c_[2]) + "*x^2";
    }

private:
    RatInterval evaluate(const RatInterval& e) const {
        RatInterval v(c_[0]);
        if (c_[1] != 0) v = v + c_[1] * e;
        if (c_[2] != 0) v = v + c_[2] * (e * e);
        return v;
    }

    std::array<Rat, 3> c_;
};

inline std::strong_ordering fe_compare(const FieldElement& x, const FieldElement& y) {
    return x <=> y;
}

inline const FieldElement& fe_max(const FieldElement& x, const FieldElement& y) {
    return x < y ? y : x;
}

}  // namespace grig
