#include <catch2/catch_amalgamated.hpp>

#include "degform/power_series.hpp"

using degform::PowerSeries;
using degform::Rational;

namespace {

PowerSeries geometric(int order) { // 1 + z + z^2 + ...
    PowerSeries s(order);
    for (int k = 0; k <= order; ++k)
        s.set_coefficient(k, Rational(1));
    return s;
}

} // namespace

TEST_CASE("series construction and access") {
    PowerSeries zero(4);
    for (int k = 0; k <= 4; ++k)
        REQUIRE(zero.coefficient(k) == Rational(0));
    REQUIRE(zero.order() == 4);
    REQUIRE(PowerSeries::one(3).coefficient(0) == Rational(1));
    REQUIRE_THROWS_AS(zero.coefficient(5), degform::invalid_operand_error);
    REQUIRE_THROWS_AS(zero.coefficient(-1), degform::invalid_operand_error);
    REQUIRE_THROWS_AS(PowerSeries(-1), degform::invalid_operand_error);
    REQUIRE_THROWS_AS(PowerSeries(std::vector<Rational>{}),
                      degform::invalid_operand_error);
}

TEST_CASE("series ring operations") {
    const PowerSeries g = geometric(6);
    PowerSeries one_minus_z(6);
    one_minus_z.set_coefficient(0, Rational(1));
    one_minus_z.set_coefficient(1, Rational(-1));

    REQUIRE(g * one_minus_z == PowerSeries::one(6));
    REQUIRE(g + (-g) == PowerSeries(6));
    REQUIRE(g - g == PowerSeries(6));
    REQUIRE(Rational(3) * PowerSeries::one(6) ==
            PowerSeries::constant(Rational(3), 6));
    REQUIRE(g * PowerSeries::one(6) == g);

    REQUIRE_THROWS_AS(g * PowerSeries::one(5),
                      degform::invalid_operand_error);
    REQUIRE_THROWS_AS(g + PowerSeries::one(5),
                      degform::invalid_operand_error);
}

TEST_CASE("series inversion") {
    const PowerSeries g = geometric(8);
    REQUIRE(g.invert() * g == PowerSeries::one(8));
    REQUIRE(g.invert().invert() == g);

    // 1/(1-z) recovered from its inverse
    PowerSeries one_minus_z(8);
    one_minus_z.set_coefficient(0, Rational(1));
    one_minus_z.set_coefficient(1, Rational(-1));
    REQUIRE(one_minus_z.invert() == g);

    REQUIRE_THROWS_AS(PowerSeries(3).invert(),
                      degform::invalid_operand_error);
}

TEST_CASE("series powers") {
    const PowerSeries g = geometric(7);
    REQUIRE(g.pow(0) == PowerSeries::one(7));
    REQUIRE(g.pow(1) == g);
    REQUIRE(g.pow(3) == g * g * g);
    REQUIRE(g.pow(-2) * g * g == PowerSeries::one(7));

    // (1+z)^5 has binomial coefficients
    PowerSeries one_plus_z(7);
    one_plus_z.set_coefficient(0, Rational(1));
    one_plus_z.set_coefficient(1, Rational(1));
    const PowerSeries p5 = one_plus_z.pow(5);
    for (int k = 0; k <= 7; ++k)
        REQUIRE(p5.coefficient(k) == Rational(degform::binomial(5, k)));

    // (1+z)^-3 has signed binomial coefficients C(k+2, 2)
    const PowerSeries pm3 = one_plus_z.pow(-3);
    for (int k = 0; k <= 7; ++k) {
        Rational expected(degform::binomial(k + 2, 2));
        REQUIRE(pm3.coefficient(k) == (k % 2 == 0 ? expected : -expected));
    }
}

TEST_CASE("reduced exponential factor") {
    // (1 - e^{-dz})/z has coefficient (-1)^k d^{k+1}/(k+1)!
    const PowerSeries s1 = degform::reduced_exp_series(1, 5);
    REQUIRE(s1.coefficient(0) == Rational(1));
    REQUIRE(s1.coefficient(1) == Rational(-1, 2));
    REQUIRE(s1.coefficient(2) == Rational(1, 6));
    REQUIRE(s1.coefficient(3) == Rational(-1, 24));

    const PowerSeries s3 = degform::reduced_exp_series(3, 4);
    REQUIRE(s3.coefficient(0) == Rational(3));
    REQUIRE(s3.coefficient(1) == Rational(-9, 2));
    REQUIRE(s3.coefficient(2) == Rational(27, 6));
    REQUIRE(s3.coefficient(4) == Rational(243, 120));

    REQUIRE_THROWS_AS(degform::reduced_exp_series(0, 3),
                      degform::invalid_operand_error);
}

TEST_CASE("Todd generating series") {
    // z/(1 - e^{-z}) = 1 + z/2 + z^2/12 - z^4/720 + z^6/30240 - ...
    const PowerSeries t = degform::todd_series(8);
    REQUIRE(t.coefficient(0) == Rational(1));
    REQUIRE(t.coefficient(1) == Rational(1, 2));
    REQUIRE(t.coefficient(2) == Rational(1, 12));
    REQUIRE(t.coefficient(3) == Rational(0));
    REQUIRE(t.coefficient(4) == Rational(-1, 720));
    REQUIRE(t.coefficient(5) == Rational(0));
    REQUIRE(t.coefficient(6) == Rational(1, 30240));
    REQUIRE(t.coefficient(7) == Rational(0));
    REQUIRE(t.coefficient(8) == Rational(-1, 1209600));

    // defining identity: todd * (1 - e^{-z})/z = 1
    REQUIRE(t * degform::reduced_exp_series(1, 8) == PowerSeries::one(8));
}
