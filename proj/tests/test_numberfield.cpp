#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "grig/numberfield.hpp"

using namespace grig;

namespace {

Rat small_rat(std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-20, 20);
    std::uniform_int_distribution<int> den(1, 12);
    return Rat(num(rng), den(rng));
}

FieldElement random_element(std::mt19937& rng) {
    return FieldElement(small_rat(rng), small_rat(rng), small_rat(rng));
}

}  // namespace

TEST_CASE("reduction modulo the minimal polynomial") {
    FieldElement eta = FieldElement::eta();

    SECTION("eta * eta^2 = 2 - eta - eta^2") {
        FieldElement eta3 = eta * (eta * eta);
        CHECK(eta3 == FieldElement(Rat(2), Rat(-1), Rat(-1)));
    }
    SECTION("eta^3 + eta^2 + eta - 2 = 0 exactly") {
        FieldElement p = eta * eta * eta + eta * eta + eta - FieldElement(2);
        CHECK(p.is_zero());
    }
    SECTION("1/eta = (eta^2 + eta + 1)/2") {
        FieldElement inv = FieldElement(1) / eta;
        CHECK(inv == FieldElement(Rat(1, 2), Rat(1, 2), Rat(1, 2)));
        CHECK(inv * eta == FieldElement(1));
    }
    SECTION("2/eta - 1 = eta^2 + eta") {
        FieldElement x = FieldElement(2) / eta - FieldElement(1);
        CHECK(x == FieldElement(Rat(0), Rat(1), Rat(1)));
    }
    SECTION("division by zero is refused") {
        CHECK_THROWS_AS(eta / FieldElement(0), divide_by_zero_error);
    }
}

TEST_CASE("field axioms on random elements") {
    std::mt19937 rng(20240811);
    for (int i = 0; i < 200; ++i) {
        FieldElement x = random_element(rng);
        FieldElement y = random_element(rng);
        FieldElement z = random_element(rng);
        REQUIRE((x + y) + z == x + (y + z));
        REQUIRE((x * y) * z == x * (y * z));
        REQUIRE(x * (y + z) == x * y + x * z);
        if (!x.is_zero()) {
            REQUIRE(x * (FieldElement(1) / x) == FieldElement(1));
            REQUIRE(y / x * x == y);
        }
    }
}

TEST_CASE("comparison is the order of the real values") {
    FieldElement eta = FieldElement::eta();

    CHECK(eta > FieldElement(Rat(4, 5)));
    CHECK(eta * eta < eta);  // 0 < eta < 1

    // w(a) + w(b) = (1 - eta^3) + eta^3 = 1 exactly
    FieldElement wa(Rat(-1), Rat(1), Rat(1));
    FieldElement wb(Rat(2), Rat(-1), Rat(-1));
    CHECK((wa + wb <=> FieldElement(1)) == std::strong_ordering::equal);

    SECTION("total order on random elements") {
        std::mt19937 rng(7);
        for (int i = 0; i < 100; ++i) {
            FieldElement x = random_element(rng);
            FieldElement y = random_element(rng);
            auto xy = x <=> y;
            auto yx = y <=> x;
            if (xy == std::strong_ordering::equal) {
                REQUIRE(x == y);
            } else {
                REQUIRE(xy != yx);
            }
        }
    }
}

TEST_CASE("enclosures") {
    FieldElement eta = FieldElement::eta();

    SECTION("eta at 30 bits") {
        ApproxReal a = eta.to_approx(30);
        CHECK(a.radius() <= Rat(1, Int(1) << 30));
        CHECK(rat_abs(a.value() - Rat(8105357138ll, 10000000000ll)) < Rat(2, Int(1000000000)));
    }
    SECTION("zero has radius zero") {
        ApproxReal z = FieldElement(0).to_approx(10);
        CHECK(z.radius() == 0);
        CHECK(z.value() == 0);
    }
    SECTION("w(d) = 1 - eta at 30 bits") {
        ApproxReal a = FieldElement(Rat(1), Rat(-1), Rat(0)).to_approx(30);
        CHECK(rat_abs(a.value() - Rat(1894642862ll, 10000000000ll)) < Rat(2, Int(1000000000)));
    }
    SECTION("refinement is nested") {
        FieldElement x = eta * eta - eta / FieldElement(3);
        RatInterval prev = x.to_approx(20).interval();
        for (unsigned bits = 40; bits <= 160; bits += 40) {
            RatInterval cur = x.to_approx(bits).interval();
            REQUIRE(prev.lo <= cur.lo);
            REQUIRE(cur.hi <= prev.hi);
            prev = cur;
        }
    }
    SECTION("order agrees with disjoint enclosures") {
        std::mt19937 rng(99);
        for (int i = 0; i < 50; ++i) {
            FieldElement x = random_element(rng);
            FieldElement y = random_element(rng);
            if (x == y) continue;
            bool less = x < y;
            for (unsigned bits = 32;; bits *= 2) {
                RatInterval ix = x.to_approx(bits).interval();
                RatInterval iy = y.to_approx(bits).interval();
                if (ix.hi < iy.lo) {
                    REQUIRE(less);
                    break;
                }
                if (iy.hi < ix.lo) {
                    REQUIRE(!less);
                    break;
                }
                REQUIRE(bits <= 4096);
            }
        }
    }
}

TEST_CASE("textual rendering") {
    FieldElement x(Rat(1, 2), Rat(-3), Rat(0));
    CHECK(x.render() == "1/2 + -3*x + 0*x^2");
    CHECK(parse_rational("-7/2") == Rat(-7, 2));
    CHECK_THROWS_AS(parse_rational("0.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("1e3"), std::invalid_argument);
    CHECK(render_rational(Rat(-7, 2)) == "-7/2");
    CHECK(decimal_string(Rat(1, 8), 4) == "0.1250");
    CHECK(decimal_string(Rat(-1, 3), 5) == "-0.33333");
}
