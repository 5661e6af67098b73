#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "grig/growth_fit.hpp"

using namespace grig;

TEST_CASE("synthetic subexponential data recovers its exponent") {
    // gamma(n) = round(exp(n^0.7)) on n = 4..20
    std::vector<std::pair<Rat, Int>> samples;
    for (int n = 4; n <= 20; ++n) {
        double g = std::exp(std::pow(double(n), 0.7));
        samples.emplace_back(Rat(n), Int(static_cast<long long>(g + 0.5)));
    }
    GrowthFit fit = fit_growth_exponent(samples);
    CHECK(rat_abs(fit.exponent.value() - Rat(7, 10)) < Rat(5, 100));
    CHECK(fit.residual < 0.01);
    CHECK(fit.points_used == 17);
}

TEST_CASE("degenerate inputs are rejected") {
    std::vector<std::pair<Rat, Int>> constant{{Rat(2), Int(7)}, {Rat(3), Int(7)}, {Rat(4), Int(7)}};
    CHECK_THROWS_AS(fit_growth_exponent(constant), degenerate_fit_error);

    std::vector<std::pair<Rat, Int>> too_small{{Rat(2), Int(5)}, {Rat(3), Int(9)}};
    CHECK_THROWS_AS(fit_growth_exponent(too_small), degenerate_fit_error);

    // points with gamma < 2 are filtered before the count check
    std::vector<std::pair<Rat, Int>> filtered{
        {Rat(1), Int(1)}, {Rat(2), Int(1)}, {Rat(3), Int(5)}, {Rat(4), Int(9)}};
    CHECK_THROWS_AS(fit_growth_exponent(filtered), degenerate_fit_error);
}

TEST_CASE("exponent probe on an enumerated unit ball") {
    BallTable t = enumerate_ball(unit_weights(), FieldElement(6));
    std::vector<FieldElement> points;
    for (int n = 2; n <= 6; ++n) points.emplace_back(n);
    GrowthFit fit = estimate_alpha(t, points);
    // desk scale cannot pin the true exponent; consistency interval only
    CHECK(fit.exponent.value() > Rat(4, 10));
    CHECK(fit.exponent.value() < Rat(1));
    CHECK(fit.points_used == 5);
}
