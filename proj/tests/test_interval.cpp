#include <catch2/catch_amalgamated.hpp>

#include "grig/encoding.hpp"
#include "grig/interval.hpp"
#include "grig/numberfield.hpp"

using namespace grig;

TEST_CASE("interval arithmetic basics") {
    RatInterval a{Rat(1), Rat(2)};
    RatInterval b{Rat(-3), Rat(5)};
    RatInterval p = a * b;
    CHECK(p.lo == Rat(-6));
    CHECK(p.hi == Rat(10));
    CHECK((a + b).lo == Rat(-2));
    CHECK((a - b).hi == Rat(5));
    CHECK_THROWS_AS(a / b, std::domain_error);
    CHECK((a / RatInterval{Rat(2), Rat(4)}).lo == Rat(1, 4));

    RatInterval r = RatInterval{Rat(1, 3), Rat(1, 3)}.round_out(8);
    CHECK(r.contains(Rat(1, 3)));
    CHECK(r.width() <= Rat(2, 256));
}

TEST_CASE("ln enclosures") {
    // ln 2 = 0.693147180559945309417232121458...
    const Rat ln2_ref(Int("693147180559945309417232121458"),
                      Int("1000000000000000000000000000000"));
    RatInterval l2 = ln2_enclosure(64);
    CHECK(l2.contains(ln2_ref));
    CHECK(l2.width() < Rat(1, Int(1) << 60));

    CHECK(ln_enclosure(Rat(1), 64).contains(Rat(0)));

    // monotone: ln 2 < ln 3
    CHECK(ln_enclosure(Rat(2), 64).hi < ln_enclosure(Rat(3), 64).lo);

    // ln(1/2) = -ln 2
    RatInterval lh = ln_enclosure(Rat(1, 2), 64);
    CHECK(lh.contains(-ln2_ref));

    CHECK_THROWS_AS(ln_enclosure(Rat(0), 32), std::domain_error);
    CHECK_THROWS_AS(ln_enclosure(Rat(-1), 32), std::domain_error);
}

TEST_CASE("exp enclosures") {
    // e = 2.718281828459045235360287471352...
    const Rat e_ref(Int("2718281828459045235360287471352"),
                    Int("1000000000000000000000000000000"));
    RatInterval e1 = exp_enclosure(Rat(1), 64);
    CHECK(e1.contains(e_ref));
    CHECK(e1.width() < Rat(1, Int(1) << 56));

    CHECK(exp_enclosure(Rat(0), 32).contains(Rat(1)));

    // exp(ln 2) encloses 2
    RatInterval back = exp_interval(ln2_enclosure(80), 80);
    CHECK(back.contains(Rat(2)));
}

TEST_CASE("powers through the whole stack") {
    // (2/eta)^alpha = 2 by the definition of alpha = log 2 / log(2/eta);
    // this exercises eta isolation, ln, division and exp together.
    RatInterval base = two_over_eta().to_approx(96).interval();
    RatInterval expo = alpha_approx(96).interval();
    RatInterval p = pow_interval(base, expo, 96);
    CHECK(p.contains(Rat(2)));
    CHECK(p.width() < Rat(1, Int(1) << 64));

    // alpha = 0.7674288817...
    const Rat alpha_ref(Int("7674288817"), Int("10000000000"));
    CHECK(rat_abs(expo.mid() - alpha_ref) < Rat(1, Int(1000000000)));
}
